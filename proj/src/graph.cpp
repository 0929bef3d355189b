#include "markgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace markgraph {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::optional<std::string> validation_error(std::size_t n_vertices,
                                            const std::vector<Edge>& edges,
                                            const std::vector<VertexId>& legs,
                                            bool require_connected) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= n_vertices || e.v >= n_vertices) {
      return "edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
             std::to_string(e.v) + ") has an endpoint outside 0.." +
             std::to_string(n_vertices == 0 ? 0 : n_vertices - 1);
    }
    if (e.u == e.v) {
      return "edge " + std::to_string(i) + " is a self-loop at vertex " +
             std::to_string(e.u);
    }
  }
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k] >= n_vertices) {
      return "leg " + std::to_string(k) + " is attached to vertex " +
             std::to_string(legs[k]) + " which does not exist";
    }
  }
  if (require_connected) {
    if (n_vertices == 0) return std::string("graph has no internal vertices");
    if (!is_connected(n_vertices, edges)) {
      return std::string("graph is disconnected");
    }
  }
  return std::nullopt;
}

bool is_connected(std::size_t n_vertices, const std::vector<Edge>& edges) {
  if (n_vertices == 0) return true;
  DisjointSets ds(n_vertices);
  std::size_t components = n_vertices;
  for (const auto& e : edges) {
    if (ds.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

std::size_t cycle_space_dimension(std::size_t n_vertices,
                                  const std::vector<Edge>& edges) {
  DisjointSets ds(n_vertices);
  std::size_t forest_edges = 0;
  for (const auto& e : edges) {
    if (ds.unite(e.u, e.v)) ++forest_edges;
  }
  return edges.size() - forest_edges;
}

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges,
             std::vector<VertexId> legs, std::vector<std::string> leg_labels)
    : n_vertices_(n_vertices),
      edges_(std::move(edges)),
      legs_(std::move(legs)),
      leg_labels_(std::move(leg_labels)) {
  if (auto err = validation_error(n_vertices_, edges_, legs_)) {
    throw ValidationError(*err);
  }
  if (!leg_labels_.empty()) {
    if (leg_labels_.size() != legs_.size()) {
      throw ValidationError("leg_labels has " +
                            std::to_string(leg_labels_.size()) +
                            " entries but the graph has " +
                            std::to_string(legs_.size()) + " legs");
    }
    std::set<std::string> seen(leg_labels_.begin(), leg_labels_.end());
    if (seen.size() != leg_labels_.size()) {
      throw ValidationError("leg labels must be distinct");
    }
  }
}

std::size_t Graph::leg_count(VertexId v) const {
  return static_cast<std::size_t>(std::count(legs_.begin(), legs_.end(), v));
}

std::size_t Graph::valence(VertexId v) const {
  std::size_t k = leg_count(v);
  for (const auto& e : edges_) {
    if (e.u == v) ++k;
    if (e.v == v) ++k;
  }
  return k;
}

std::size_t Graph::multiplicity(VertexId u, VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
      }));
}

std::string Graph::leg_label(std::size_t k) const {
  if (has_leg_labels()) return leg_labels_.at(k);
  return std::to_string(k + 1);
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.r = g.legs().size();
  c.l = static_cast<long>(g.n_edges()) - static_cast<long>(g.n_vertices()) + 1;
  c.regular3 = true;
  for (VertexId v = 0; v < g.n_vertices(); ++v) {
    if (g.valence(v) != 3) {
      c.regular3 = false;
      break;
    }
  }
  return c;
}

bool is_cycle(const Graph& g, const std::vector<EdgeId>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::vector<int> degree(g.n_vertices(), 0);
  std::vector<Edge> sub;
  for (EdgeId e : edge_ids) {
    if (e >= g.n_edges()) return false;
    const auto& edge = g.edges()[e];
    ++degree[edge.u];
    ++degree[edge.v];
    sub.push_back(edge);
  }
  std::vector<VertexId> touched;
  for (VertexId v = 0; v < g.n_vertices(); ++v) {
    if (degree[v] != 0 && degree[v] != 2) return false;
    if (degree[v] == 2) touched.push_back(v);
  }
  // Relabel the touched vertices densely and test connectivity.
  std::vector<VertexId> local(g.n_vertices(), 0);
  for (std::size_t i = 0; i < touched.size(); ++i) {
    local[touched[i]] = static_cast<VertexId>(i);
  }
  for (auto& e : sub) {
    e = {local[e.u], local[e.v]};
  }
  return is_connected(touched.size(), sub);
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> incident;
  std::vector<bool> on_path;
  std::vector<EdgeId> path_edges;
  std::vector<VertexId> path_vertices;
  std::set<std::vector<EdgeId>> found;
  VertexId start = 0;

  explicit CycleSearch(const Graph& graph)
      : g(graph), incident(graph.n_vertices()), on_path(graph.n_vertices()) {
    for (EdgeId e = 0; e < g.n_edges(); ++e) {
      const auto& edge = g.edges()[e];
      incident[edge.u].push_back({e, edge.v});
      incident[edge.v].push_back({e, edge.u});
    }
  }

  void extend(VertexId x) {
    for (const auto& [e, y] : incident[x]) {
      if (y == start) {
        // Closing edge must differ from the one we arrived by; each cycle
        // is met in both directions, keep the one with first < closing.
        if (path_edges.empty() || e == path_edges.back()) continue;
        if (path_edges.front() > e) continue;
        std::vector<EdgeId> cycle = path_edges;
        cycle.push_back(e);
        std::sort(cycle.begin(), cycle.end());
        found.insert(std::move(cycle));
      } else if (y > start && !on_path[y]) {
        on_path[y] = true;
        path_edges.push_back(e);
        extend(y);
        path_edges.pop_back();
        on_path[y] = false;
      }
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  CycleSearch search(g);
  for (VertexId s = 0; s < g.n_vertices(); ++s) {
    search.start = s;
    search.on_path[s] = true;
    search.extend(s);
    search.on_path[s] = false;
  }
  std::vector<Cycle> cycles;
  cycles.reserve(search.found.size());
  for (const auto& edge_ids : search.found) {
    Cycle c;
    c.edge_ids = edge_ids;
    std::set<VertexId> verts;
    for (EdgeId e : edge_ids) {
      verts.insert(g.edges()[e].u);
      verts.insert(g.edges()[e].v);
    }
    c.vertex_ids.assign(verts.begin(), verts.end());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

}  // namespace markgraph
