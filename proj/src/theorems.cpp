#include "markgraph/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "markgraph/homology.hpp"

namespace markgraph {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationResult make_result(std::string check, std::string scope) {
  VerificationResult r;
  r.check = std::move(check);
  r.scope = std::move(scope);
  return r;
}

void fail(VerificationResult& r, std::string witness) {
  if (!r.passed) return;  // keep the first witness
  r.passed = false;
  r.witness = std::move(witness);
}

std::string describe(const CohomologyReport& report) {
  std::ostringstream out;
  bool first = true;
  for (const auto& d : report.degrees) {
    if (d.free_rank == 0 && d.torsion.empty()) continue;
    if (!first) out << ", ";
    first = false;
    out << "H^" << d.n << " rank " << d.free_rank;
    if (!d.torsion.empty()) {
      out << " torsion";
      for (const auto& t : d.torsion) out << ' ' << t;
    }
  }
  if (first) out << "all zero";
  return out.str();
}

/// Checks that a matrix vanishes; on failure names the offending
/// coordinate through the bases it acts between.
bool expect_zero(VerificationResult& r, const SparseIntMatrix& m, const std::string& what,
                 std::size_t degree, const std::vector<Marking>& rows,
                 const std::vector<Marking>& cols) {
  if (m.is_zero()) return true;
  const auto& e = m.entries().front();
  std::ostringstream w;
  w << what << " fails from degree " << degree << ": coefficient of " << rows[e.row].key()
    << " in the image of " << cols[e.col].key() << " is " << e.value;
  fail(r, w.str());
  return false;
}

bool expect_zero_chain(VerificationResult& r, const Chain& c, const std::string& what) {
  if (c.is_zero()) return true;
  const auto& [m, coeff] = *c.terms().begin();
  fail(r, what + " is not zero: coefficient " + std::to_string(coeff) + " on " + m.key());
  return false;
}

const std::vector<Marking>& basis_or_empty(const MarkingComplex& c, std::size_t n) {
  static const std::vector<Marking> none;
  return n < c.bases.size() ? c.bases[n] : none;
}

template <typename F>
void parallel_for(std::size_t count, std::size_t workers, F&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_lock);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

VerificationResult verify_differential_algebra(const ConflictSystem& cs,
                                               const std::string& scope, SignRules rules) {
  Stopwatch clock;
  auto r = make_result("algebra", scope);
  const auto delta = build_complex(cs, DifferentialKind::delta, rules);
  const auto d = build_complex(cs, DifferentialKind::d, rules);
  const auto big_d = build_complex(cs, DifferentialKind::D, rules);
  const bool mixed = cs.has_sector(Sector::edge) && cs.has_sector(Sector::cycle);

  const std::size_t top = delta.bases.size();
  for (std::size_t n = 0; n + 1 < top; ++n) {
    const auto& rows = basis_or_empty(delta, n + 2);
    const auto& cols = delta.bases[n];
    expect_zero(r, delta.maps[n + 1] * delta.maps[n], "delta^2 = 0", n, rows, cols);
    expect_zero(r, d.maps[n + 1] * d.maps[n], "d^2 = 0", n, rows, cols);
    expect_zero(r, delta.maps[n + 1] * d.maps[n] + d.maps[n + 1] * delta.maps[n],
                "delta d + d delta = 0", n, rows, cols);
    expect_zero(r, big_d.maps[n + 1] * big_d.maps[n], "D^2 = 0", n, rows, cols);
  }
  if (mixed) {
    const auto s = build_complex(cs, DifferentialKind::edge_sector, rules);
    const auto t = build_complex(cs, DifferentialKind::cycle_sector, rules);
    const auto total = build_complex(cs, DifferentialKind::total, rules);
    for (std::size_t n = 0; n + 1 < top; ++n) {
      const auto& rows = basis_or_empty(delta, n + 2);
      const auto& cols = delta.bases[n];
      expect_zero(r, s.maps[n + 1] * s.maps[n], "S^2 = 0", n, rows, cols);
      expect_zero(r, t.maps[n + 1] * t.maps[n], "T^2 = 0", n, rows, cols);
      expect_zero(r, total.maps[n + 1] * total.maps[n], "(S + (-1)^n T)^2 = 0", n, rows,
                  cols);
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_universal(const Graph& g, Sector sector, const std::string& scope,
                                    SignRules rules) {
  Stopwatch clock;
  auto r = make_result("universal", scope);
  if (sector != Sector::edge && sector != Sector::cycle) {
    throw std::invalid_argument("universal model check needs the edge or cycle sector");
  }
  const auto source =
      sector == Sector::edge ? edge_conflict_system(g) : cycle_conflict_system(g);
  const auto model = vertex_model(source);
  const Transport psi(source, model);

  const std::size_t top = top_degree(source);
  if (top_degree(model) != top) {
    fail(r, "top degrees differ between the system and its vertex model");
  }
  std::vector<std::vector<Marking>> src_bases, dst_bases;
  for (std::size_t n = 0; n <= top + 1; ++n) {
    src_bases.push_back(graded_basis(source, n));
    dst_bases.push_back(graded_basis(model, n));
    std::vector<Marking> image;
    for (const auto& m : src_bases.back()) {
      image.push_back(psi(m));
      if (psi.inverse(image.back()) != m) {
        fail(r, "transport does not invert on " + m.key());
      }
    }
    std::sort(image.begin(), image.end());
    if (image != dst_bases.back()) {
      fail(r, "transport is not a bijection of degree-" + std::to_string(n) + " bases");
    }
  }
  if (!r.passed) {
    r.elapsed_ms = clock.elapsed_ms();
    return r;
  }
  for (std::size_t n = 0; n <= top; ++n) {
    for (auto kind : {DifferentialKind::delta, DifferentialKind::d}) {
      const auto there = matrix_of(src_bases[n], dst_bases[n + 1], [&](const Marking& m) {
        return psi(apply(source, kind, m, rules));
      });
      const auto here = matrix_of(src_bases[n], dst_bases[n + 1], [&](const Marking& m) {
        return apply(model, kind, psi(m), rules);
      });
      const std::string what = kind == DifferentialKind::delta ? "Psi delta = mu Psi"
                                                               : "Psi d = u Psi";
      expect_zero(r, there - here, what, n, dst_bases[n + 1], src_bases[n]);
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_acyclicity(const ConflictSystem& cs, DifferentialKind kind,
                                     const std::string& scope, SignRules rules) {
  Stopwatch clock;
  auto r = make_result("acyclic", scope);
  try {
    const auto c = build_complex(cs, kind, rules);
    const auto report = cohomology(c.dims(), c.maps);
    r.detail = describe(report);
    if (!report.is_point()) {
      fail(r, "cohomology of " + std::string(to_string(kind)) + " is " + describe(report) +
                  ", expected H^0 rank 1 only");
    }
  } catch (const ComplexError& e) {
    fail(r, std::string("not a complex: ") + e.what());
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_mu_homology(const ConflictSystem& cs, const std::string& scope) {
  Stopwatch clock;
  auto r = make_result("mu", scope);
  const auto report = mu_homology(cs);
  r.detail = describe(report);
  if (!report.is_point()) {
    fail(r, "delta-only homology is " + describe(report) + ", expected H_0 rank 1 only");
  }
  for (std::size_t n = 1; n <= top_degree(cs); ++n) {
    const auto block = mu_homology(vertex_conflict_system(n, {}), MuScope::fully_marked);
    const bool zero = std::all_of(block.degrees.begin(), block.degrees.end(),
                                  [](const DegreeReport& d) {
                                    return d.free_rank == 0 && d.torsion.empty();
                                  });
    if (!zero) {
      fail(r, "fully-marked model on " + std::to_string(n) + " elements has " +
                  describe(block));
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_cocycles(const Graph& g, const std::string& scope,
                                   SignRules rules) {
  Stopwatch clock;
  auto r = make_result("cocycles", scope);
  const auto edges = edge_conflict_system(g);
  const auto cycles = cycle_conflict_system(g);
  const auto vertices = vertex_conflict_system(g);
  const auto mixed = mixed_conflict_system(g);

  expect_zero_chain(r,
                    apply(edges, DifferentialKind::edge_sector,
                          exp_generator(edges, {Sector::edge}), rules),
                    "S exp(chi+)(m0)");
  expect_zero_chain(r,
                    apply(cycles, DifferentialKind::cycle_sector,
                          exp_generator(cycles, {Sector::cycle}), rules),
                    "T exp(delta+)(m0)");
  expect_zero_chain(r,
                    apply(vertices, DifferentialKind::D,
                          exp_generator(vertices, {Sector::vertex}), rules),
                    "U exp(vertex generator)(m0)");
  const auto both = exp_generator(mixed, {Sector::edge, Sector::cycle});
  expect_zero_chain(r, apply(mixed, DifferentialKind::edge_sector, both, rules),
                    "S exp(delta+) exp(chi+)(m0)");
  expect_zero_chain(r, apply(mixed, DifferentialKind::cycle_sector, both, rules),
                    "T exp(delta+) exp(chi+)(m0)");
  expect_zero_chain(r, apply(mixed, DifferentialKind::total, both, rules),
                    "(S + T) exp(delta+) exp(chi+)(m0)");
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_commutation(const Graph& g, const std::string& scope,
                                      SignRules rules) {
  Stopwatch clock;
  auto r = make_result("commute", scope);
  const auto mixed = mixed_conflict_system(g);
  const auto s = build_complex(mixed, DifferentialKind::edge_sector, rules);
  const auto t = build_complex(mixed, DifferentialKind::cycle_sector, rules);
  for (std::size_t n = 0; n + 1 < s.bases.size(); ++n) {
    expect_zero(r, s.maps[n + 1] * t.maps[n] - t.maps[n + 1] * s.maps[n], "ST - TS = 0", n,
                basis_or_empty(s, n + 2), s.bases[n]);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_order_independence(const ConflictSystem& cs,
                                             DifferentialKind kind, std::size_t trials,
                                             std::uint64_t seed, const std::string& scope) {
  Stopwatch clock;
  auto r = make_result("order", scope);
  auto report_of = [&](const ConflictSystem& system) {
    const auto c = build_complex(system, kind);
    return cohomology(c.dims(), c.maps);
  };
  const auto reference = report_of(cs);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(cs.size());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto report = report_of(cs.permuted(order));
    if (report != reference) {
      std::ostringstream w;
      w << "trial " << trial << " with order [";
      for (std::size_t k = 0; k < order.size(); ++k) w << (k ? " " : "") << order[k];
      w << "] gives " << describe(report) << " instead of " << describe(reference);
      fail(r, w.str());
      break;
    }
  }
  r.detail = std::to_string(trials) + " orders, " + describe(reference);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationResult verify_main_theorem(const FamilySpec& spec,
                                       const std::vector<FamilyMember>& family,
                                       SignRules rules) {
  Stopwatch clock;
  auto r = make_result("main", "family(r=" + std::to_string(spec.r) +
                                   ",l=" + std::to_string(spec.l) + ")");
  CohomologyReport total_report;
  std::size_t generator_terms = 0;
  std::size_t kernel_rank = 0;
  for (const auto& member : family) {
    const auto mixed = mixed_conflict_system(member.graph);
    try {
      const auto c = build_complex(mixed, DifferentialKind::total, rules);
      const auto report = cohomology(c.dims(), c.maps);
      total_report = direct_sum(total_report, report);
      kernel_rank += c.bases[0].size() - smith_normal_form(c.maps[0]).rank;
    } catch (const ComplexError& e) {
      fail(r, member.key + ": not a complex: " + e.what());
      continue;
    }
    const auto generator = exp_generator(mixed, {Sector::edge, Sector::cycle});
    generator_terms += generator.size();
    if (generator.is_zero()) fail(r, member.key + ": generator is the zero chain");
    const auto image = apply(mixed, DifferentialKind::total, generator, rules);
    if (!image.is_zero()) {
      const auto& [m, coeff] = *image.terms().begin();
      fail(r, member.key + ": total differential of the generator has coefficient " +
                  std::to_string(coeff) + " on " + m.key());
    }
  }
  const std::size_t h0 = total_report.degrees.empty() ? 0 : total_report.degrees[0].free_rank;
  if (h0 != family.size()) {
    fail(r, "H^0 has rank " + std::to_string(h0) + " but the family has " +
                std::to_string(family.size()) + " graphs");
  }
  for (const auto& d : total_report.degrees) {
    if (d.n > 0 && (d.free_rank != 0 || !d.torsion.empty())) {
      fail(r, "H^" + std::to_string(d.n) + " does not vanish: " + describe(total_report));
      break;
    }
  }
  if (!total_report.torsion_free()) fail(r, "torsion in " + describe(total_report));
  r.detail = std::to_string(family.size()) + " graphs, degree-0 kernel rank " +
             std::to_string(kernel_rank) + ", generator terms " +
             std::to_string(generator_terms);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "algebra", "universal", "acyclic", "mu", "cocycles", "commute", "order", "main"};
  return names;
}

const std::vector<ClaimCoverage>& claim_manifest() {
  static const std::vector<ClaimCoverage> claims = {
      {"delta and d square to zero and anticommute", "algebra"},
      {"marking complexes are isomorphic to vertex-marking complexes of the conflict graph",
       "universal"},
      {"every marking complex is acyclic", "acyclic"},
      {"delta-only homology is Z in degree 0", "mu"},
      {"fully-marked models on n > 0 elements are acyclic", "mu"},
      {"exp generators are cocycles", "cocycles"},
      {"edge and cycle differentials commute", "commute"},
      {"cohomology does not depend on the element order", "order"},
      {"total complex has degree-0 rank equal to the family size", "main"},
  };
  return claims;
}

std::size_t workers_from_environment() {
  if (const char* env = std::getenv("MARKGRAPH_WORKERS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<VerificationResult> verify_family(const FamilySpec& spec,
                                              const VerifyOptions& options) {
  for (const auto& name : options.checks) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
  }
  auto selected = [&](const std::string& name) {
    return options.checks.empty() || options.checks.count(name) > 0;
  };
  const auto family = enumerate_graphs(spec, options.limits);
  const SignRules rules = options.rules;

  using PerGraph = std::function<std::vector<VerificationResult>(const FamilyMember&)>;
  std::vector<std::pair<std::string, PerGraph>> per_graph = {
      {"algebra",
       [&](const FamilyMember& m) {
         return std::vector{
             verify_differential_algebra(edge_conflict_system(m.graph), m.key + "/edge", rules),
             verify_differential_algebra(cycle_conflict_system(m.graph), m.key + "/cycle",
                                         rules),
             verify_differential_algebra(vertex_conflict_system(m.graph), m.key + "/vertex",
                                         rules),
             verify_differential_algebra(mixed_conflict_system(m.graph), m.key + "/mixed",
                                         rules)};
       }},
      {"universal",
       [&](const FamilyMember& m) {
         return std::vector{verify_universal(m.graph, Sector::edge, m.key + "/edge", rules),
                            verify_universal(m.graph, Sector::cycle, m.key + "/cycle", rules)};
       }},
      {"acyclic",
       [&](const FamilyMember& m) {
         return std::vector{
             verify_acyclicity(edge_conflict_system(m.graph), DifferentialKind::D,
                               m.key + "/edge", rules),
             verify_acyclicity(cycle_conflict_system(m.graph), DifferentialKind::D,
                               m.key + "/cycle", rules),
             verify_acyclicity(vertex_conflict_system(m.graph), DifferentialKind::D,
                               m.key + "/vertex", rules),
             verify_acyclicity(mixed_conflict_system(m.graph), DifferentialKind::D,
                               m.key + "/mixed-D", rules),
             verify_acyclicity(mixed_conflict_system(m.graph), DifferentialKind::total,
                               m.key + "/mixed-total", rules)};
       }},
      {"mu",
       [&](const FamilyMember& m) {
         return std::vector{
             verify_mu_homology(vertex_conflict_system(m.graph), m.key + "/vertex"),
             verify_mu_homology(vertex_model(edge_conflict_system(m.graph)),
                                m.key + "/edge-model"),
             verify_mu_homology(vertex_model(cycle_conflict_system(m.graph)),
                                m.key + "/cycle-model")};
       }},
      {"cocycles",
       [&](const FamilyMember& m) {
         return std::vector{verify_cocycles(m.graph, m.key, rules)};
       }},
      {"commute",
       [&](const FamilyMember& m) {
         return std::vector{verify_commutation(m.graph, m.key, rules)};
       }},
      {"order",
       [&](const FamilyMember& m) {
         return std::vector{
             verify_order_independence(edge_conflict_system(m.graph), DifferentialKind::D,
                                       options.trials, options.seed, m.key + "/edge"),
             verify_order_independence(cycle_conflict_system(m.graph), DifferentialKind::D,
                                       options.trials, options.seed, m.key + "/cycle"),
             verify_order_independence(vertex_conflict_system(m.graph), DifferentialKind::D,
                                       options.trials, options.seed, m.key + "/vertex"),
             verify_order_independence(mixed_conflict_system(m.graph),
                                       DifferentialKind::total, options.trials, options.seed,
                                       m.key + "/mixed")};
       }},
  };

  std::vector<VerificationResult> results;
  for (const auto& name : check_names()) {
    if (!selected(name)) continue;
    if (name == "main") {
      results.push_back(verify_main_theorem(spec, family, rules));
      continue;
    }
    const auto it = std::find_if(per_graph.begin(), per_graph.end(),
                                 [&](const auto& p) { return p.first == name; });
    std::vector<std::vector<VerificationResult>> slots(family.size());
    parallel_for(family.size(), options.workers,
                 [&](std::size_t i) { slots[i] = it->second(family[i]); });
    for (auto& slot : slots) {
      for (auto& res : slot) results.push_back(std::move(res));
    }
  }
  return results;
}

}  // namespace markgraph
