#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "markgraph/graph.hpp"

namespace markgraph {

/// Refusal to run a computation that exceeds a configured bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilySpec {
  std::size_t r = 0;
  std::size_t l = 0;
  bool legs_labeled = true;

  /// r + 2(l - 1), or a negative value when the family is necessarily empty.
  long forced_vertex_count() const {
    return static_cast<long>(r) + 2 * (static_cast<long>(l) - 1);
  }
  long forced_edge_count() const {
    return static_cast<long>(r) + 3 * (static_cast<long>(l) - 1);
  }
};

struct EnumerationLimits {
  std::size_t max_vertices = 12;
};

struct FamilyMember {
  Graph graph;  // canonical representative
  std::string key;
};

/// The family: connected, loop-free multigraphs with r legs, first Betti
/// number l, every internal vertex trivalent. Representatives are
/// canonical and sorted by key. Legs of generated graphs are labeled
/// "1".."r" in labeled mode.
std::vector<FamilyMember> enumerate_graphs(const FamilySpec& spec,
                                           const EnumerationLimits& limits = {});

/// Size of the family without materialising it; only canonical keys are
/// kept in memory.
std::size_t count_graphs(const FamilySpec& spec, const EnumerationLimits& limits = {});

struct CensusRow {
  std::string key;
  std::size_t n_edges = 0;
  std::size_t n_cycles = 0;
  std::size_t edge_markings = 0;
  std::size_t cycle_markings = 0;
  std::size_t vertex_markings = 0;
  std::size_t mixed_markings = 0;
};

std::vector<CensusRow> family_census(const FamilySpec& spec,
                                     const EnumerationLimits& limits = {});

std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace markgraph
