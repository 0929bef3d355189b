#include "markgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace markgraph {

namespace {

struct Search {
  std::size_t n = 0;
  std::vector<int> mult;                  // n x n
  std::vector<std::vector<int>> tag;      // leg signature per vertex
  std::vector<std::vector<std::pair<int, int>>> adj;  // (w, multiplicity)

  bool have_best = false;
  std::vector<int> best_code;
  std::vector<int> best_order;  // best_order[pos] = vertex

  int m(std::size_t a, std::size_t b) const { return mult[a * n + b]; }

  static int compress(std::vector<int>& colour,
                      const std::vector<std::vector<int>>& signature) {
    std::vector<std::size_t> idx(colour.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return signature[a] < signature[b];
    });
    int next = -1;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k == 0 || signature[idx[k]] != signature[idx[k - 1]]) ++next;
      colour[idx[k]] = next;
    }
    return next + 1;
  }

  /// Equitable refinement; colours stay ordered consistently with the
  /// input colouring.
  int refine(std::vector<int>& colour) const {
    std::vector<std::vector<int>> start(n);
    for (std::size_t v = 0; v < n; ++v) start[v] = {colour[v]};
    int cells = compress(colour, start);
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> around;
        for (const auto& [w, k] : adj[v]) around.push_back({colour[w], k});
        std::sort(around.begin(), around.end());
        auto& s = sig[v];
        s.push_back(colour[v]);
        for (const auto& [c, k] : around) {
          s.push_back(c);
          s.push_back(k);
        }
      }
      int next = compress(colour, sig);
      if (next == cells) return cells;
      cells = next;
    }
  }

  std::vector<int> encode(const std::vector<int>& order) const {
    std::vector<int> code;
    code.reserve(n * n + n * 4);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        code.push_back(m(order[i], order[j]));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      code.push_back(static_cast<int>(tag[order[i]].size()));
      code.insert(code.end(), tag[order[i]].begin(), tag[order[i]].end());
    }
    return code;
  }

  void explore(std::vector<int> colour) {
    int cells = refine(colour);
    if (static_cast<std::size_t>(cells) == n) {
      std::vector<int> order(n);
      for (std::size_t v = 0; v < n; ++v) order[colour[v]] = static_cast<int>(v);
      auto code = encode(order);
      if (!have_best || code < best_code) {
        have_best = true;
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    // First colour class with more than one vertex.
    std::vector<int> size(cells, 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (std::size_t x = 0; x < n; ++x) {
      if (colour[x] != target) continue;
      std::vector<int> child(n);
      for (std::size_t v = 0; v < n; ++v) {
        child[v] = 2 * colour[v] + ((colour[v] == target && v != x) ? 1 : 0);
      }
      explore(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, bool legs_labeled) {
  Search s;
  s.n = g.n_vertices();
  s.mult.assign(s.n * s.n, 0);
  for (const auto& e : g.edges()) {
    ++s.mult[e.u * s.n + e.v];
    ++s.mult[e.v * s.n + e.u];
  }
  s.adj.resize(s.n);
  for (std::size_t a = 0; a < s.n; ++a) {
    for (std::size_t b = 0; b < s.n; ++b) {
      if (s.m(a, b) > 0) s.adj[a].push_back({static_cast<int>(b), s.m(a, b)});
    }
  }

  // Leg signature: label ranks in labeled mode, a bare count otherwise.
  std::vector<std::string> sorted_labels;
  for (std::size_t k = 0; k < g.legs().size(); ++k) {
    sorted_labels.push_back(g.leg_label(k));
  }
  std::sort(sorted_labels.begin(), sorted_labels.end());
  s.tag.assign(s.n, {});
  for (std::size_t k = 0; k < g.legs().size(); ++k) {
    auto& t = s.tag[g.legs()[k]];
    if (legs_labeled) {
      auto rank = std::lower_bound(sorted_labels.begin(), sorted_labels.end(),
                                   g.leg_label(k)) -
                  sorted_labels.begin();
      t.push_back(static_cast<int>(rank));
    } else {
      t.push_back(0);
    }
  }
  for (auto& t : s.tag) std::sort(t.begin(), t.end());

  std::vector<int> colour(s.n, 0);
  if (s.n > 0) {
    std::vector<std::vector<int>> sig(s.n);
    for (std::size_t v = 0; v < s.n; ++v) {
      sig[v].push_back(static_cast<int>(s.tag[v].size()));
      sig[v].insert(sig[v].end(), s.tag[v].begin(), s.tag[v].end());
    }
    Search::compress(colour, sig);
    s.explore(colour);
  }

  const auto& order = s.best_order;
  std::vector<int> position(s.n);
  for (std::size_t p = 0; p < s.n; ++p) position[order[p]] = static_cast<int>(p);

  std::vector<Edge> edges;
  std::string key = "V" + std::to_string(s.n) + "|E";
  bool first = true;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i + 1; j < s.n; ++j) {
      int k = s.m(order[i], order[j]);
      if (k == 0) continue;
      for (int c = 0; c < k; ++c) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
      if (!first) key += ',';
      first = false;
      key += std::to_string(i) + '-' + std::to_string(j);
      if (k > 1) key += 'x' + std::to_string(k);
    }
  }

  std::vector<std::pair<VertexId, std::string>> legs;
  for (std::size_t k = 0; k < g.legs().size(); ++k) {
    legs.push_back({static_cast<VertexId>(position[g.legs()[k]]),
                    legs_labeled ? g.leg_label(k) : std::string()});
  }
  std::sort(legs.begin(), legs.end());
  key += "|L";
  std::vector<VertexId> leg_ids;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (k > 0) key += ',';
    key += std::to_string(legs[k].first);
    if (legs_labeled) key += '=' + legs[k].second;
    leg_ids.push_back(legs[k].first);
    labels.push_back(legs[k].second);
  }
  if (!legs_labeled) labels.clear();

  return {Graph(s.n, std::move(edges), std::move(leg_ids), std::move(labels)),
          std::move(key)};
}

}  // namespace markgraph
