#pragma once

// Reference implementations used only by the tests. None of them share code
// with the library beyond its public types.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "markgraph/complex.hpp"
#include "markgraph/conflict.hpp"
#include "markgraph/graph.hpp"
#include "markgraph/homology.hpp"

namespace oracle {

using markgraph::BigInt;
using markgraph::BigMatrix;

// Graph families --------------------------------------------------------

/// Multigraph as a symmetric multiplicity matrix plus a leg count per vertex.
struct RawGraph {
  std::size_t n = 0;
  std::vector<int> legs;
  std::vector<std::vector<int>> mult;
};

/// Backtracking isomorphism test preserving leg counts.
bool isomorphic(const RawGraph& a, const RawGraph& b);

/// Every vertex permutation preserving multiplicities and leg counts.
std::vector<std::vector<std::size_t>> automorphisms(const RawGraph& g);

/// Unlabeled family by exhaustive multiplicity-matrix enumeration, one
/// representative per isomorphism class.
std::vector<RawGraph> unlabeled_family(std::size_t r, std::size_t l);

/// Number of distinct leg permutations induced by automorphisms (legs at
/// one vertex may be permuted freely).
std::size_t leg_symmetry_order(const RawGraph& g);

/// Class count; the labeled count is obtained from the unlabeled classes
/// as the sum of r! / leg_symmetry_order.
std::size_t family_count(std::size_t r, std::size_t l, bool legs_labeled);

RawGraph from_graph(const markgraph::Graph& g);

// Independent sets --------------------------------------------------------

struct SubsetCensus {
  std::size_t independent_sets = 0;
  std::size_t admissible_markings = 0;  // sum of 2^|I|
  std::size_t independence_number = 0;
};

/// Scans all 2^n subsets.
SubsetCensus brute_force_subsets(const markgraph::ConflictSystem& cs);

// Markings and differentials --------------------------------------------

/// Sign formulas evaluated directly on sets of marked positions.
markgraph::Chain reference_delta(const markgraph::ConflictSystem& cs,
                                 const markgraph::Marking& m);
markgraph::Chain reference_d(const markgraph::ConflictSystem& cs, const markgraph::Marking& m);

/// Power series sum_k g^k(m0) / k! of the one-mark generator restricted
/// to `sectors`; each division is checked to be exact.
markgraph::Chain exp_by_power_series(const markgraph::ConflictSystem& cs,
                                     const std::vector<markgraph::Sector>& sectors);

// Linear algebra -----------------------------------------------------------

BigInt bareiss_determinant(BigMatrix m);

/// Invariant factors from gcds of k x k minors; small matrices only.
std::vector<BigInt> determinantal_invariant_factors(const std::vector<std::vector<std::int64_t>>& m);

/// Rank over the rationals by fraction-free elimination.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& m);

/// Random conflict system on n elements with edge probability p / 100.
markgraph::ConflictSystem random_system(std::size_t n, unsigned p, std::uint64_t seed);

}  // namespace oracle
