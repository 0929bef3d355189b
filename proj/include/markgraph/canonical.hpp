#pragma once

#include <string>

#include "markgraph/graph.hpp"

namespace markgraph {

struct CanonicalForm {
  Graph graph;      // vertices renumbered by canonical position
  std::string key;  // equal iff the inputs are isomorphic
};

/// Canonical relabeling by colour refinement plus individualisation.
///
/// With legs_labeled, isomorphisms must carry every leg to the leg with
/// the same label (graphs without explicit labels use their 1-based leg
/// positions). Otherwise only the number of legs per vertex matters.
CanonicalForm canonical_form(const Graph& g, bool legs_labeled);

inline std::string canonical_key(const Graph& g, bool legs_labeled) {
  return canonical_form(g, legs_labeled).key;
}

}  // namespace markgraph
