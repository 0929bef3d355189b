#include "markgraph/enumerate.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "markgraph/canonical.hpp"
#include "markgraph/conflict.hpp"

namespace markgraph {

namespace {

class Generator {
 public:
  Generator(const FamilySpec& spec, std::size_t n_vertices, bool keep_graphs)
      : spec_(spec), n_(n_vertices), keep_graphs_(keep_graphs), remaining_(n_vertices, 3) {}

  void run() {
    if (spec_.legs_labeled) {
      place_labeled_leg(0, 0);
    } else {
      place_unlabeled_legs(0, spec_.r, 3);
    }
  }

  std::map<std::string, Graph>& graphs() { return found_; }
  std::size_t key_count() const { return keep_graphs_ ? found_.size() : keys_.size(); }

 private:
  // Unlabeled: leg counts per vertex are non-increasing in vertex order.
  void place_unlabeled_legs(std::size_t v, std::size_t left, std::size_t cap) {
    if (v == n_) {
      if (left == 0) fill_edges(0, 0);
      return;
    }
    for (std::size_t k = std::min(cap, left) + 1; k-- > 0;) {
      if (k == 3 && n_ > 1) continue;  // a vertex with three legs is isolated
      for (std::size_t i = 0; i < k; ++i) legs_.push_back(static_cast<VertexId>(v));
      remaining_[v] -= static_cast<int>(k);
      place_unlabeled_legs(v + 1, left - k, k);
      remaining_[v] += static_cast<int>(k);
      for (std::size_t i = 0; i < k; ++i) legs_.pop_back();
    }
  }

  // Labeled: leg k goes to an already used vertex or the first fresh one.
  void place_labeled_leg(std::size_t k, std::size_t used) {
    if (k == spec_.r) {
      fill_edges(0, 0);
      return;
    }
    const int cap = n_ > 1 ? 1 : 0;  // keep one slot free unless |V| = 1
    for (std::size_t v = 0; v < std::min(used + 1, n_); ++v) {
      if (remaining_[v] <= cap) continue;
      --remaining_[v];
      legs_.push_back(static_cast<VertexId>(v));
      place_labeled_leg(k + 1, std::max(used, v + 1));
      legs_.pop_back();
      ++remaining_[v];
    }
  }

  // Pair the free half-edges of vertex u with partners w > u, partners
  // taken in non-decreasing order so each multiplicity pattern is
  // produced once.
  void fill_edges(std::size_t u, std::size_t min_partner) {
    while (u < n_ && remaining_[u] == 0) {
      ++u;
      min_partner = 0;
    }
    if (u == n_) {
      accept();
      return;
    }
    for (std::size_t w = std::max(u + 1, min_partner); w < n_; ++w) {
      if (remaining_[w] == 0) continue;
      --remaining_[u];
      --remaining_[w];
      edges_.push_back({static_cast<VertexId>(u), static_cast<VertexId>(w)});
      fill_edges(u, remaining_[u] == 0 ? 0 : w);
      edges_.pop_back();
      ++remaining_[w];
      ++remaining_[u];
    }
  }

  void accept() {
    if (!is_connected(n_, edges_)) return;
    std::vector<std::string> labels;
    if (spec_.legs_labeled) {
      for (std::size_t k = 0; k < legs_.size(); ++k) {
        labels.push_back(std::to_string(k + 1));
      }
    }
    Graph g(n_, edges_, legs_, std::move(labels));
    auto form = canonical_form(g, spec_.legs_labeled);
    if (keep_graphs_) {
      found_.try_emplace(std::move(form.key), std::move(form.graph));
    } else {
      keys_.insert(std::move(form.key));
    }
  }

  const FamilySpec& spec_;
  std::size_t n_;
  bool keep_graphs_;
  std::vector<int> remaining_;
  std::vector<VertexId> legs_;
  std::vector<Edge> edges_;
  std::map<std::string, Graph> found_;
  std::set<std::string> keys_;
};

// Forced vertex count, or nullopt for a necessarily empty family.
std::optional<std::size_t> checked_vertex_count(const FamilySpec& spec,
                                                const EnumerationLimits& limits) {
  const long n = spec.forced_vertex_count();
  if (n < 1) return std::nullopt;
  if (static_cast<std::size_t>(n) > limits.max_vertices) {
    throw ResourceLimitError(
        "family (r=" + std::to_string(spec.r) + ", l=" + std::to_string(spec.l) +
        ") needs " + std::to_string(n) + " internal vertices; the bound is " +
        std::to_string(limits.max_vertices));
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

std::vector<FamilyMember> enumerate_graphs(const FamilySpec& spec,
                                           const EnumerationLimits& limits) {
  const auto n = checked_vertex_count(spec, limits);
  if (!n) return {};
  Generator gen(spec, *n, true);
  gen.run();
  std::vector<FamilyMember> out;
  for (auto& [key, g] : gen.graphs()) out.push_back({std::move(g), key});
  return out;
}

std::size_t count_graphs(const FamilySpec& spec, const EnumerationLimits& limits) {
  const auto n = checked_vertex_count(spec, limits);
  if (!n) return 0;
  Generator gen(spec, *n, false);
  gen.run();
  return gen.key_count();
}

std::vector<CensusRow> family_census(const FamilySpec& spec,
                                     const EnumerationLimits& limits) {
  std::vector<CensusRow> rows;
  for (const auto& member : enumerate_graphs(spec, limits)) {
    const auto& g = member.graph;
    CensusRow row;
    row.key = member.key;
    row.n_edges = g.n_edges();
    row.n_cycles = enumerate_cycles(g).size();
    row.edge_markings = admissible_marking_count(edge_conflict_system(g));
    row.cycle_markings = admissible_marking_count(cycle_conflict_system(g));
    row.vertex_markings = admissible_marking_count(vertex_conflict_system(g));
    row.mixed_markings = admissible_marking_count(mixed_conflict_system(g));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "key,edges,cycles,edge_markings,cycle_markings,vertex_markings,"
         "mixed_markings\n";
  for (const auto& r : rows) {
    out << '"' << r.key << "\"," << r.n_edges << ',' << r.n_cycles << ','
        << r.edge_markings << ',' << r.cycle_markings << ','
        << r.vertex_markings << ',' << r.mixed_markings << '\n';
  }
  return out.str();
}

}  // namespace markgraph
