#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "markgraph/conflict.hpp"
#include "markgraph/sparse.hpp"

namespace markgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ...
  std::size_t rank = 0;
  bool used_big_integers = false;  // the machine-word pass overflowed
};

/// Smith normal form together with unimodular U, V such that U * M * V is
/// diagonal with the invariant factors leading the diagonal.
struct SNFDecomposition {
  SNFResult result;
  BigMatrix left;   // U, n_rows x n_rows
  BigMatrix right;  // V, n_cols x n_cols
};

SNFResult smith_normal_form(const SparseIntMatrix& m);
SNFDecomposition smith_decomposition(const SparseIntMatrix& m);

/// Rank over Z/p. Throws std::invalid_argument unless p is prime.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

/// Raised when consecutive maps of a complex do not compose to zero.
class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DegreeReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct CohomologyReport {
  std::vector<DegreeReport> degrees;

  long euler() const;             // alternating sum of dims
  long euler_of_ranks() const;    // alternating sum of free ranks
  bool torsion_free() const;
  /// Z in degree 0, nothing above.
  bool is_point() const;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/// Cohomology of C^0 -> C^1 -> ... with coboundaries[n] : C^n -> C^{n+1}.
/// Throws ComplexError when some pair of consecutive maps composes to a
/// nonzero matrix.
CohomologyReport cohomology(const std::vector<std::size_t>& dims,
                            const std::vector<SparseIntMatrix>& coboundaries);

/// Degree-wise direct sum.
CohomologyReport direct_sum(const CohomologyReport& a, const CohomologyReport& b);

/// Which markings enter the delta-only complex.
enum class MuScope {
  all,           // every admissible marking
  fully_marked,  // no unmarked element
};

/// Homology of the delta-only complex graded by the number of 1-marks;
/// degree k of the report is k = |P_1|.
CohomologyReport mu_homology(const ConflictSystem& cs, MuScope scope = MuScope::all);

}  // namespace markgraph
