#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace markgraph {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Coordinate-list integer matrix. Entries are sorted by (row, col), unique
/// and nonzero.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols) {}
  /// Duplicate coordinates are summed; zeros dropped. Throws
  /// std::out_of_range for coordinates outside the shape.
  SparseIntMatrix(std::size_t n_rows, std::size_t n_cols,
                  std::vector<MatrixEntry> entries);

  static SparseIntMatrix from_dense(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  std::int64_t at(std::size_t row, std::size_t col) const;

  std::vector<std::vector<std::int64_t>> to_dense() const;
  SparseIntMatrix transposed() const;
  /// Row k of the result is row row_order[k] of this; likewise columns.
  SparseIntMatrix permuted(const std::vector<std::size_t>& row_order,
                           const std::vector<std::size_t>& col_order) const;

  SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
  SparseIntMatrix operator+(const SparseIntMatrix& rhs) const;
  SparseIntMatrix operator-(const SparseIntMatrix& rhs) const;
  SparseIntMatrix scaled(std::int64_t factor) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Coordinate-list text: a "rows cols nnz" header then "row col value" lines.
std::string to_coordinate_text(const SparseIntMatrix& m);
SparseIntMatrix from_coordinate_text(const std::string& text);

}  // namespace markgraph
