#include "markgraph/conflict.hpp"

#include <algorithm>
#include <stdexcept>

namespace markgraph {

std::string_view to_string(Sector s) {
  switch (s) {
    case Sector::edge:
      return "edge";
    case Sector::cycle:
      return "cycle";
    case Sector::vertex:
      return "vertex";
  }
  return "?";
}

Sector sector_from_string(std::string_view name) {
  if (name == "edge") return Sector::edge;
  if (name == "cycle") return Sector::cycle;
  if (name == "vertex") return Sector::vertex;
  throw std::invalid_argument("unknown sector '" + std::string(name) + "'");
}

ConflictSystem::ConflictSystem(std::vector<Element> elements,
                               const std::vector<SimpleEdge>& conflicts,
                               std::string label)
    : elements_(std::move(elements)),
      matrix_(elements_.size() * elements_.size(), 0),
      neighbours_(elements_.size()),
      label_(std::move(label)) {
  const std::size_t n = elements_.size();
  for (const auto& c : conflicts) {
    if (c.a >= n || c.b >= n) {
      throw std::invalid_argument("conflict pair out of range");
    }
    if (c.a == c.b) {
      throw std::invalid_argument("conflict relation must be irreflexive");
    }
    matrix_[c.a * n + c.b] = 1;
    matrix_[c.b * n + c.a] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (matrix_[a * n + b]) neighbours_[a].push_back(b);
    }
  }
}

bool ConflictSystem::has_sector(Sector s) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [s](const Element& e) { return e.sector == s; });
}

std::vector<SimpleEdge> ConflictSystem::conflict_pairs() const {
  std::vector<SimpleEdge> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : neighbours_[a]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

ConflictSystem ConflictSystem::permuted(
    const std::vector<std::size_t>& order) const {
  const std::size_t n = size();
  if (order.size() != n) {
    throw std::invalid_argument("permutation has wrong length");
  }
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || position[order[k]] != n) {
      throw std::invalid_argument("order is not a permutation");
    }
    position[order[k]] = k;
  }
  std::vector<Element> elements;
  elements.reserve(n);
  for (std::size_t k = 0; k < n; ++k) elements.push_back(elements_[order[k]]);
  std::vector<SimpleEdge> pairs;
  for (const auto& p : conflict_pairs()) {
    pairs.push_back({position[p.a], position[p.b]});
  }
  return ConflictSystem(std::move(elements), pairs, label_);
}

namespace {

bool share_vertex(const std::vector<VertexId>& a,
                  const std::vector<VertexId>& b) {
  // Both sorted.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

ConflictSystem shared_vertex_system(std::vector<Element> elements,
                                    std::string label) {
  std::vector<SimpleEdge> conflicts;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (share_vertex(elements[a].support, elements[b].support)) {
        conflicts.push_back({a, b});
      }
    }
  }
  return ConflictSystem(std::move(elements), conflicts, std::move(label));
}

std::vector<Element> edge_elements(const Graph& g) {
  std::vector<Element> out;
  for (EdgeId e = 0; e < g.n_edges(); ++e) {
    const auto& edge = g.edges()[e];
    out.push_back({e, Sector::edge,
                   {std::min(edge.u, edge.v), std::max(edge.u, edge.v)}});
  }
  return out;
}

std::vector<Element> cycle_elements(const Graph& g) {
  std::vector<Element> out;
  auto cycles = enumerate_cycles(g);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    out.push_back({c, Sector::cycle, cycles[c].vertex_ids});
  }
  return out;
}

}  // namespace

ConflictSystem edge_conflict_system(const Graph& g) {
  return shared_vertex_system(edge_elements(g), "edge");
}

ConflictSystem cycle_conflict_system(const Graph& g) {
  return shared_vertex_system(cycle_elements(g), "cycle");
}

ConflictSystem mixed_conflict_system(const Graph& g) {
  auto elements = edge_elements(g);
  auto cycles = cycle_elements(g);
  elements.insert(elements.end(), cycles.begin(), cycles.end());
  return shared_vertex_system(std::move(elements), "mixed");
}

ConflictSystem vertex_conflict_system(const Graph& g) {
  std::vector<SimpleEdge> adjacency;
  for (const auto& e : g.edges()) adjacency.push_back({e.u, e.v});
  return vertex_conflict_system(g.n_vertices(), adjacency, "vertex");
}

ConflictSystem vertex_conflict_system(std::size_t n,
                                      const std::vector<SimpleEdge>& edges,
                                      std::string label) {
  std::vector<Element> elements;
  for (std::size_t v = 0; v < n; ++v) {
    elements.push_back({v, Sector::vertex, {static_cast<VertexId>(v)}});
  }
  for (const auto& e : edges) {
    if (e.a == e.b) {
      throw std::invalid_argument("vertex conflict graph has a self-loop");
    }
  }
  return ConflictSystem(std::move(elements), edges, std::move(label));
}

namespace {

void grow(const ConflictSystem& cs, std::size_t next, std::size_t limit,
          std::vector<char>& blocked, IndependentSet& current,
          std::vector<IndependentSet>& out) {
  out.push_back(current);
  if (current.size() == limit) return;
  for (std::size_t p = next; p < cs.size(); ++p) {
    if (blocked[p]) continue;
    std::vector<std::size_t> newly;
    for (std::size_t q : cs.neighbours(p)) {
      if (!blocked[q]) {
        blocked[q] = 1;
        newly.push_back(q);
      }
    }
    current.push_back(p);
    grow(cs, p + 1, limit, blocked, current, out);
    current.pop_back();
    for (std::size_t q : newly) blocked[q] = 0;
  }
}

}  // namespace

std::vector<IndependentSet> independent_sets(
    const ConflictSystem& cs, std::optional<std::size_t> max_size) {
  std::vector<IndependentSet> out;
  std::vector<char> blocked(cs.size(), 0);
  IndependentSet current;
  grow(cs, 0, max_size.value_or(cs.size()), blocked, current, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const IndependentSet& a, const IndependentSet& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

std::size_t independence_number(const ConflictSystem& cs) {
  std::size_t best = 0;
  for (const auto& s : independent_sets(cs)) best = std::max(best, s.size());
  return best;
}

std::size_t admissible_marking_count(const ConflictSystem& cs) {
  std::size_t total = 0;
  for (const auto& s : independent_sets(cs)) total += std::size_t{1} << s.size();
  return total;
}

}  // namespace markgraph
