#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace markgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for structurally malformed graph input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Connected multigraph on internal vertices 0..n-1 with external legs.
 *
 * Edges are kept as an ordered sequence: parallel edges are distinct
 * entries and their position is the element order used by the
 * edge-marking complex. Legs are half-edges attached to one internal
 * vertex each and never count towards connectivity.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws ValidationError for out-of-range endpoints, self-loops,
  /// bad leg data, or a disconnected vertex set.
  Graph(std::size_t n_vertices, std::vector<Edge> edges,
        std::vector<VertexId> legs = {},
        std::vector<std::string> leg_labels = {});

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& legs() const { return legs_; }
  const std::vector<std::string>& leg_labels() const { return leg_labels_; }
  bool has_leg_labels() const { return !leg_labels_.empty(); }

  /// Internal edge endpoints plus legs at v.
  std::size_t valence(VertexId v) const;
  std::size_t leg_count(VertexId v) const;
  /// Number of edges joining u and v.
  std::size_t multiplicity(VertexId u, VertexId v) const;
  bool incident(EdgeId e, VertexId v) const {
    return edges_[e].u == v || edges_[e].v == v;
  }

  /// Label of leg k; falls back to its 1-based position when unlabeled.
  std::string leg_label(std::size_t k) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> legs_;
  std::vector<std::string> leg_labels_;
};

struct GraphClass {
  std::size_t r = 0;  // legs
  long l = 0;         // first Betti number
  bool regular3 = false;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify(const Graph& g);

/// Checks endpoints, loops and connectivity without constructing a Graph.
/// Returns an error message, or nullopt when the data is well-formed.
std::optional<std::string> validation_error(std::size_t n_vertices,
                                            const std::vector<Edge>& edges,
                                            const std::vector<VertexId>& legs,
                                            bool require_connected = true);

bool is_connected(std::size_t n_vertices, const std::vector<Edge>& edges);

/// Rank of the cycle space, computed from a spanning forest.
std::size_t cycle_space_dimension(std::size_t n_vertices,
                                  const std::vector<Edge>& edges);

struct Cycle {
  std::vector<EdgeId> edge_ids;      // sorted
  std::vector<VertexId> vertex_ids;  // sorted

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// All cycles of g, each once, sorted lexicographically by edge-id set.
std::vector<Cycle> enumerate_cycles(const Graph& g);

/// The 0-or-2 incidence and connectivity predicate on an edge subset.
bool is_cycle(const Graph& g, const std::vector<EdgeId>& edge_ids);

}  // namespace markgraph
