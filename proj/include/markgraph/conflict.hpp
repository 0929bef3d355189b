#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markgraph/graph.hpp"

namespace markgraph {

enum class Sector { edge, cycle, vertex };

std::string_view to_string(Sector s);
Sector sector_from_string(std::string_view name);

struct Element {
  std::size_t source_id = 0;  // edge id, cycle index, or vertex id
  Sector sector = Sector::edge;
  std::vector<VertexId> support;  // internal vertices the object touches
};

struct SimpleEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const SimpleEdge&, const SimpleEdge&) = default;
};

/**
 * Totally ordered markable objects with a symmetric, irreflexive conflict
 * relation. Element index is the order: index i precedes index j iff i < j.
 */
class ConflictSystem {
 public:
  ConflictSystem() = default;
  /// Conflicts are given as unordered pairs; duplicates are tolerated,
  /// self-pairs are rejected.
  ConflictSystem(std::vector<Element> elements,
                 const std::vector<SimpleEdge>& conflicts,
                 std::string label = {});

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  bool conflicts(std::size_t a, std::size_t b) const {
    return matrix_[a * elements_.size() + b] != 0;
  }
  const std::vector<std::size_t>& neighbours(std::size_t a) const {
    return neighbours_[a];
  }
  const std::string& label() const { return label_; }
  bool has_sector(Sector s) const;

  /// The conflict graph as a list of pairs a < b, sorted.
  std::vector<SimpleEdge> conflict_pairs() const;

  /// Same objects re-ordered: new element k is old element order[k].
  ConflictSystem permuted(const std::vector<std::size_t>& order) const;

 private:
  std::vector<Element> elements_;
  std::vector<char> matrix_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::string label_;
};

/// Internal edges of g in sequence order; parallel edges conflict.
ConflictSystem edge_conflict_system(const Graph& g);
/// Cycles of g in enumerate_cycles order; conflict iff they share a vertex.
ConflictSystem cycle_conflict_system(const Graph& g);
/// Edges followed by cycles, conflicting whenever they share a vertex.
ConflictSystem mixed_conflict_system(const Graph& g);
/// Internal vertices of g; adjacent vertices conflict.
ConflictSystem vertex_conflict_system(const Graph& g);
/// Vertex marking system of an arbitrary simple graph on n vertices
/// (need not be connected).
ConflictSystem vertex_conflict_system(std::size_t n,
                                      const std::vector<SimpleEdge>& edges,
                                      std::string label = "vertex");

using IndependentSet = std::vector<std::size_t>;

/// Every conflict-free subset (including the empty one) of at most
/// max_size elements, ordered by size and then lexicographically.
std::vector<IndependentSet> independent_sets(
    const ConflictSystem& cs, std::optional<std::size_t> max_size = {});

std::size_t independence_number(const ConflictSystem& cs);

/// Number of admissible {0,1,2}-markings: sum over independent sets of
/// 2^|I|.
std::size_t admissible_marking_count(const ConflictSystem& cs);

}  // namespace markgraph
