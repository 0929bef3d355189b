#pragma once

#include "markgraph/conflict.hpp"
#include "markgraph/graph.hpp"

namespace fixtures {

using markgraph::Edge;
using markgraph::Graph;

// Two parallel edges between the two leg vertices.
inline Graph bubble() { return Graph(2, {{0, 1}, {0, 1}}, {0, 1}); }

// Bubble, bridge, bubble; edges e1..e5 in drawing order.
inline Graph dumbbell() {
  return Graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}}, {0, 3});
}

// Three parallel edges, no legs.
inline Graph theta() { return Graph(2, {{0, 1}, {0, 1}, {0, 1}}, {}); }

inline Graph k4() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {});
}

// Four-leg tree with one internal edge.
inline Graph tree4() { return Graph(2, {{0, 1}}, {0, 0, 1, 1}); }

inline Graph triangle3() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}); }

// Triangle 1-2-3 with pendant vertices 4 and 5 on vertex 3 (zero-based).
inline markgraph::ConflictSystem kite_vertices() {
  return markgraph::vertex_conflict_system(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}});
}

inline markgraph::ConflictSystem triangle_conflicts() {
  return markgraph::vertex_conflict_system(3, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace fixtures
