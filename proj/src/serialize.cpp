#include "markgraph/serialize.hpp"

namespace markgraph {

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n_vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["legs"] = g.legs();
  if (g.has_leg_labels()) j["leg_labels"] = g.leg_labels();
  return j;
}

Json member_to_json(const FamilyMember& m) {
  Json j = graph_to_json(m.graph);
  j["key"] = m.key;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph record must be a JSON object");
  const auto n = field<std::size_t>(j, "n");
  std::vector<Edge> edges;
  for (const auto& pair : field<std::vector<std::vector<VertexId>>>(j, "edges")) {
    if (pair.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    edges.push_back({pair[0], pair[1]});
  }
  auto legs = field<std::vector<VertexId>>(j, "legs");
  std::vector<std::string> labels;
  if (j.contains("leg_labels")) labels = field<std::vector<std::string>>(j, "leg_labels");
  return Graph(n, std::move(edges), std::move(legs), std::move(labels));
}

std::vector<Graph> graphs_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  std::vector<Graph> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      try {
        out.push_back(graph_from_json(j[i]));
      } catch (const std::exception& e) {
        throw ParseError("graph " + std::to_string(i) + ": " + e.what());
      }
    }
  } else {
    out.push_back(graph_from_json(j));
  }
  return out;
}

Json chain_to_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : c.terms()) {
    terms.push_back({{"marking", m.key()}, {"coeff", coeff}});
  }
  return {{"system", c.system()}, {"terms", std::move(terms)}};
}

Chain chain_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("chain must be a JSON object");
  Chain c(field<std::string>(j, "system"));
  for (const auto& t : field<Json>(j, "terms")) {
    try {
      c.add(Marking::from_string(field<std::string>(t, "marking")),
            field<std::int64_t>(t, "coeff"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return c;
}

Json report_to_json(const CohomologyReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json torsion = Json::array();
    for (const auto& t : d.torsion) {
      if (t <= std::numeric_limits<std::int64_t>::max()) {
        torsion.push_back(static_cast<std::int64_t>(t));
      } else {
        torsion.push_back(t.str());
      }
    }
    degrees.push_back({{"n", d.n},
                       {"dim", d.dim},
                       {"free_rank", d.free_rank},
                       {"torsion", std::move(torsion)}});
  }
  return {{"degrees", std::move(degrees)}, {"euler", r.euler()}};
}

Json result_to_json(const VerificationResult& r, bool with_timing) {
  Json j = {{"check", r.check}, {"scope", r.scope}, {"passed", r.passed}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace markgraph
