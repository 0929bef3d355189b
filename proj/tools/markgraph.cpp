// markgraph: enumerate graph families, compute marking-complex cohomology,
// run the verification suite and emit generator chains.
//
// Exit codes: 0 success / all checks pass, 1 computation or verification
// failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "markgraph/canonical.hpp"
#include "markgraph/complex.hpp"
#include "markgraph/conflict.hpp"
#include "markgraph/enumerate.hpp"
#include "markgraph/homology.hpp"
#include "markgraph/serialize.hpp"
#include "markgraph/theorems.hpp"

using namespace markgraph;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct FamilyFlags {
  std::size_t r = 0;
  std::size_t l = 0;
  bool labeled = false;
  bool unlabeled = false;
  std::size_t max_vertices = EnumerationLimits{}.max_vertices;

  FamilySpec spec() const { return {r, l, !unlabeled}; }
  EnumerationLimits limits() const { return {max_vertices}; }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool required) {
  auto* r = cmd->add_option("--r", f.r, "number of legs");
  auto* l = cmd->add_option("--l", f.l, "loop order (first Betti number)");
  if (required) {
    r->required();
    l->required();
  }
  auto* lab = cmd->add_flag("--legs-labeled", f.labeled, "distinguish legs (default)");
  auto* unlab = cmd->add_flag("--legs-unlabeled", f.unlabeled, "identify legs up to symmetry");
  lab->excludes(unlab);
  cmd->add_option("--max-vertices", f.max_vertices, "refuse families with more vertices")
      ->check(CLI::PositiveNumber);
}

Json spec_json(const FamilySpec& s) {
  return {{"r", s.r}, {"l", s.l}, {"legs_labeled", s.legs_labeled}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_basis_bound(const ConflictSystem& cs, std::size_t bound, const std::string& what) {
  const std::size_t count = admissible_marking_count(cs);
  if (count > bound) {
    throw ResourceLimitError(what + " has " + std::to_string(count) +
                             " admissible markings, above the bound " +
                             std::to_string(bound) + " (raise --max-basis)");
  }
}

// enumerate -------------------------------------------------------------

struct EnumerateConfig {
  FamilyFlags family;
  std::string out;
  std::string census;
};

int cmd_enumerate(const EnumerateConfig& cfg) {
  const auto spec = cfg.family.spec();
  const auto family = enumerate_graphs(spec, cfg.family.limits());
  Json records = Json::array();
  for (const auto& m : family) records.push_back(member_to_json(m));
  write_output(cfg.out, dump(records));
  if (!cfg.census.empty()) {
    write_output(cfg.census, census_csv(family_census(spec, cfg.family.limits())));
  }
  std::cerr << family.size() << " graph(s) for r=" << spec.r << " l=" << spec.l << "\n";
  return 0;
}

// cohomology ------------------------------------------------------------

struct CohomologyConfig {
  FamilyFlags family;
  std::string graph_file;
  std::vector<std::string> sectors = {"edge", "cycle", "vertex", "mixed"};
  std::string report;
  std::size_t max_basis = 200000;
};

ConflictSystem system_for(const Graph& g, const std::string& sector) {
  if (sector == "edge") return edge_conflict_system(g);
  if (sector == "cycle") return cycle_conflict_system(g);
  if (sector == "vertex") return vertex_conflict_system(g);
  return mixed_conflict_system(g);
}

int cmd_cohomology(const CohomologyConfig& cfg) {
  std::vector<std::pair<std::string, Graph>> graphs;
  if (!cfg.graph_file.empty()) {
    std::ifstream in(cfg.graph_file);
    if (!in) throw ParseError("cannot read '" + cfg.graph_file + "'");
    std::stringstream text;
    text << in.rdbuf();
    for (auto& g : graphs_from_text(text.str())) {
      graphs.emplace_back(canonical_key(g, g.has_leg_labels()), std::move(g));
    }
  } else {
    for (auto& m : enumerate_graphs(cfg.family.spec(), cfg.family.limits())) {
      graphs.emplace_back(m.key, std::move(m.graph));
    }
  }

  Json per_graph = Json::array();
  std::vector<CohomologyReport> aggregate(cfg.sectors.size());
  for (const auto& [key, g] : graphs) {
    Json sectors = Json::object();
    for (std::size_t s = 0; s < cfg.sectors.size(); ++s) {
      const auto& name = cfg.sectors[s];
      const auto cs = system_for(g, name);
      require_basis_bound(cs, cfg.max_basis, key + " (" + name + ")");
      const auto kind = name == "mixed" ? DifferentialKind::total : DifferentialKind::D;
      const auto c = build_complex(cs, kind);
      const auto report = cohomology(c.dims(), c.maps);
      aggregate[s] = direct_sum(aggregate[s], report);
      sectors[name] = report_to_json(report);
    }
    per_graph.push_back({{"key", key}, {"sectors", std::move(sectors)}});
  }
  Json totals = Json::object();
  for (std::size_t s = 0; s < cfg.sectors.size(); ++s) {
    totals[cfg.sectors[s]] = report_to_json(aggregate[s]);
  }
  Json out = {{"graphs", std::move(per_graph)}, {"aggregate", std::move(totals)}};
  write_output(cfg.report, dump(out));
  return 0;
}

// verify ----------------------------------------------------------------

struct VerifyConfig {
  FamilyFlags family;
  std::string checks = "all";
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::string fault = "none";
  std::string report;
  bool timings = false;
};

int cmd_verify(const VerifyConfig& cfg) {
  VerifyOptions options;
  if (cfg.checks != "all") {
    std::stringstream list(cfg.checks);
    for (std::string name; std::getline(list, name, ',');) {
      if (name.empty()) continue;
      const auto& known = check_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        std::cerr << "error: unknown check '" << name << "'\n";
        return kUsage;
      }
      options.checks.insert(name);
    }
  }
  options.seed = cfg.seed;
  options.trials = cfg.trials;
  options.rules.fault = sign_fault_from_string(cfg.fault);
  options.limits = cfg.family.limits();
  options.workers = workers_from_environment();

  const auto spec = cfg.family.spec();
  const auto results = verify_family(spec, options);
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& r : results) {
    if (!r.passed) {
      ++failed;
      std::cerr << "FAIL " << r.check << " " << r.scope << ": " << r.witness << "\n";
    }
    list.push_back(result_to_json(r, cfg.timings));
  }
  Json out = {{"spec", spec_json(spec)},
              {"seed", cfg.seed},
              {"trials", cfg.trials},
              {"fault", cfg.fault},
              {"passed", failed == 0},
              {"results", std::move(list)}};
  write_output(cfg.report, dump(out));
  std::cerr << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : kFailure;
}

// generator -------------------------------------------------------------

struct GeneratorConfig {
  FamilyFlags family;
  bool per_graph = false;
  std::string out;
};

int cmd_generator(const GeneratorConfig& cfg) {
  const auto spec = cfg.family.spec();
  Json chains = Json::array();
  std::size_t terms = 0;
  for (const auto& m : enumerate_graphs(spec, cfg.family.limits())) {
    const auto cs = mixed_conflict_system(m.graph);
    Chain chain(m.key);
    const auto generator = exp_generator(cs, {Sector::edge, Sector::cycle});
    for (const auto& [marking, coeff] : generator.terms()) {
      chain.add(marking, coeff);
    }
    terms += chain.size();
    Json entry = chain_to_json(chain);
    if (cfg.per_graph) entry["graph"] = graph_to_json(m.graph);
    chains.push_back(std::move(entry));
  }
  Json out = {{"spec", spec_json(spec)},
              {"graphs", chains.size()},
              {"term_count", terms},
              {"chains", std::move(chains)}};
  write_output(cfg.out, dump(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marking complexes of trivalent graphs with legs"};
  app.require_subcommand(1);

  EnumerateConfig enumerate_cfg;
  auto* enumerate = app.add_subcommand("enumerate", "list the graph family");
  add_family_flags(enumerate, enumerate_cfg.family, true);
  enumerate->add_option("--out", enumerate_cfg.out, "graphs JSON (default stdout)");
  enumerate->add_option("--census", enumerate_cfg.census, "also write the census CSV");

  CohomologyConfig cohomology_cfg;
  auto* coh = app.add_subcommand("cohomology", "cohomology reports per graph and sector");
  add_family_flags(coh, cohomology_cfg.family, false);
  auto* graph_opt = coh->add_option("--graph", cohomology_cfg.graph_file,
                                    "graph JSON file (object or array)");
  coh->add_option("--sectors", cohomology_cfg.sectors, "edge, cycle, vertex, mixed")
      ->delimiter(',')
      ->check(CLI::IsMember({"edge", "cycle", "vertex", "mixed"}));
  coh->add_option("--report", cohomology_cfg.report, "report JSON (default stdout)");
  coh->add_option("--max-basis", cohomology_cfg.max_basis,
                  "refuse systems with more admissible markings")
      ->check(CLI::PositiveNumber);

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "run the verification suite over a family");
  add_family_flags(verify, verify_cfg.family, true);
  verify->add_option("--checks", verify_cfg.checks, "all, or a comma list of check names");
  verify->add_option("--seed", verify_cfg.seed, "seed for order trials");
  verify->add_option("--trials", verify_cfg.trials, "random orders per system");
  verify->add_option("--inject-fault", verify_cfg.fault,
                     "drop one sign factor: delta-global, delta-term, d-term, total-sign")
      ->check(CLI::IsMember({"none", "delta-global", "delta-term", "d-term", "total-sign"}));
  verify->add_option("--report", verify_cfg.report, "report JSON (default stdout)");
  verify->add_flag("--timings", verify_cfg.timings, "include elapsed times in the report");

  GeneratorConfig generator_cfg;
  auto* generator = app.add_subcommand("generator", "emit the degree-0 generator chains");
  add_family_flags(generator, generator_cfg.family, true);
  generator->add_flag("--per-graph", generator_cfg.per_graph, "attach each graph record");
  generator->add_option("--out", generator_cfg.out, "chains JSON (default stdout)");

  try {
    app.parse(argc, argv);
    if (coh->parsed()) {
      const bool has_family = coh->count("--r") > 0 || coh->count("--l") > 0;
      if (has_family == (graph_opt->count() > 0)) {
        throw CLI::ValidationError("cohomology needs either --graph or both --r and --l");
      }
      if (has_family && (coh->count("--r") == 0 || coh->count("--l") == 0)) {
        throw CLI::ValidationError("cohomology needs both --r and --l");
      }
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(enumerate_cfg);
    if (coh->parsed()) return cmd_cohomology(cohomology_cfg);
    if (verify->parsed()) return cmd_verify(verify_cfg);
    if (generator->parsed()) return cmd_generator(generator_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
