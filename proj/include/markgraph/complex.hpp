#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "markgraph/conflict.hpp"
#include "markgraph/marking.hpp"
#include "markgraph/sparse.hpp"

namespace markgraph {

/**
 * Maps on the marking complex of a conflict system.
 *
 *  delta         1 -> 2 on one element, sign (-1)^{#marked} (-1)^{#later 1-marks}
 *  d             0 -> 2 on one unblocked element, sign (-1)^{#earlier marks}
 *  D             delta + d
 *  edge_sector   delta + d restricted to edge elements, counts sector-local
 *  cycle_sector  same for cycle elements
 *  total         edge_sector + (-1)^n cycle_sector, n = number of 2-marks
 *
 * Every map raises the number of 2-marks by one (the cohomological degree).
 * Elements are blocked by a marked element of any sector.
 */
enum class DifferentialKind { delta, d, D, edge_sector, cycle_sector, total };

std::string_view to_string(DifferentialKind k);
/// Throws std::invalid_argument for an unknown name.
DifferentialKind differential_kind_from_string(std::string_view name);

/// Test hook: drop exactly one sign factor from the differentials.
enum class SignFault { none, delta_global, delta_term, d_term, total_sign };

std::string_view to_string(SignFault f);
SignFault sign_fault_from_string(std::string_view name);

struct SignRules {
  SignFault fault = SignFault::none;
};

/// Admissible markings with exactly the given numbers of 1- and 2-marks,
/// in lexicographic order of value strings.
std::vector<Marking> graded_basis(const ConflictSystem& cs, Bigrade grade);
/// Admissible markings with `degree` 2-marks and any number of 1-marks.
std::vector<Marking> graded_basis(const ConflictSystem& cs, std::size_t degree);

/// Highest populated degree: the size of a largest independent set.
std::size_t top_degree(const ConflictSystem& cs);

Chain apply_delta(const ConflictSystem& cs, const Marking& m, SignRules rules = {});
Chain apply_d(const ConflictSystem& cs, const Marking& m, SignRules rules = {});
Chain apply_D(const ConflictSystem& cs, const Marking& m, SignRules rules = {});
Chain apply(const ConflictSystem& cs, DifferentialKind kind, const Marking& m,
            SignRules rules = {});
Chain apply(const ConflictSystem& cs, DifferentialKind kind, const Chain& c,
            SignRules rules = {});

struct DifferentialMatrix {
  std::vector<Marking> cols;  // source basis
  std::vector<Marking> rows;  // target basis
  SparseIntMatrix matrix;
};

/// Matrix of `kind` from degree `source_degree` to source_degree + 1.
/// Throws std::out_of_range when source_degree exceeds top_degree(cs).
DifferentialMatrix differential_matrix(const ConflictSystem& cs, DifferentialKind kind,
                                       std::size_t source_degree, SignRules rules = {});

/// Bases of every degree 0..top together with the consecutive matrices.
struct MarkingComplex {
  std::vector<std::vector<Marking>> bases;
  std::vector<SparseIntMatrix> maps;  // maps[n]: degree n -> n + 1

  std::vector<std::size_t> dims() const;
};

MarkingComplex build_complex(const ConflictSystem& cs, DifferentialKind kind,
                             SignRules rules = {});

/// Matrix of a map given by an arbitrary marking -> chain function between
/// two explicit bases. Throws std::logic_error when an image term falls
/// outside the target basis.
template <typename Map>
SparseIntMatrix matrix_of(const std::vector<Marking>& source,
                          const std::vector<Marking>& target, Map&& map);

/**
 * Basis bijection between a marking complex and the vertex-marking complex
 * of its conflict graph. Vertex k of the model stands for element k.
 */
class Transport {
 public:
  /// Throws std::invalid_argument unless the model has the same size,
  /// vertex elements only, and adjacency equal to the source conflicts.
  Transport(const ConflictSystem& source, const ConflictSystem& vertex_model);

  Marking operator()(const Marking& m) const;
  Marking inverse(const Marking& m) const;
  Chain operator()(const Chain& c) const;

  const ConflictSystem& source() const { return *source_; }
  const ConflictSystem& model() const { return *model_; }

 private:
  const ConflictSystem* source_;
  const ConflictSystem* model_;
};

/// The conflict graph of cs as a vertex-marking system, ordered like cs.
ConflictSystem vertex_model(const ConflictSystem& cs);

/// Sum of m with one more unblocked, unmarked element set to 1, over the
/// elements of `sector` (all elements when empty). Coefficients are +1.
Chain one_mark_generator(const ConflictSystem& cs, const Marking& m,
                         std::optional<Sector> sector = {});

/// Sum over all admissible {0,1}-markings whose marks lie in the given
/// sectors, each with coefficient +1; this is exp of the one-mark
/// generators applied to the unmarked configuration.
Chain exp_generator(const ConflictSystem& cs, const std::vector<Sector>& sectors);

// ---------------------------------------------------------------------------

template <typename Map>
SparseIntMatrix matrix_of(const std::vector<Marking>& source,
                          const std::vector<Marking>& target, Map&& map) {
  std::unordered_map<std::string, std::size_t> row_of;
  row_of.reserve(target.size());
  for (std::size_t k = 0; k < target.size(); ++k) row_of.emplace(target[k].key(), k);
  std::vector<MatrixEntry> entries;
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Chain image = map(source[col]);
    for (const auto& [m, coeff] : image.terms()) {
      auto it = row_of.find(m.key());
      if (it == row_of.end()) {
        throw std::logic_error("image of '" + source[col].key() + "' contains '" +
                               m.key() + "' outside the target basis");
      }
      entries.push_back({it->second, col, coeff});
    }
  }
  return SparseIntMatrix(target.size(), source.size(), std::move(entries));
}

}  // namespace markgraph
