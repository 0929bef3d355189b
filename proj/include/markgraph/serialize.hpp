#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "markgraph/enumerate.hpp"
#include "markgraph/graph.hpp"
#include "markgraph/homology.hpp"
#include "markgraph/marking.hpp"
#include "markgraph/theorems.hpp"

namespace markgraph {

using Json = nlohmann::ordered_json;

/// Raised on malformed JSON documents; the message locates the problem.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json graph_to_json(const Graph& g);
Json member_to_json(const FamilyMember& m);  // graph fields plus "key"

/// Accepts {"n", "edges", "legs", "leg_labels"?}; throws ParseError on
/// structural problems and ValidationError on invalid graphs.
Graph graph_from_json(const Json& j);

/// A single graph object or an array of graph objects.
std::vector<Graph> graphs_from_text(const std::string& text);

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

/// Torsion entries are written as integers when they fit in 64 bits and as
/// decimal strings otherwise.
Json report_to_json(const CohomologyReport& r);

Json result_to_json(const VerificationResult& r, bool with_timing);

}  // namespace markgraph
