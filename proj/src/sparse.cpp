#include "markgraph/sparse.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace markgraph {

SparseIntMatrix::SparseIntMatrix(std::size_t n_rows, std::size_t n_cols,
                                 std::vector<MatrixEntry> entries)
    : n_rows_(n_rows), n_cols_(n_cols) {
  for (const auto& e : entries) {
    if (e.row >= n_rows || e.col >= n_cols) {
      throw std::out_of_range("matrix entry (" + std::to_string(e.row) + "," +
                              std::to_string(e.col) + ") outside " +
                              std::to_string(n_rows) + "x" +
                              std::to_string(n_cols));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row &&
        entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0; });
}

SparseIntMatrix SparseIntMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n_cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (rows[i][j] != 0) entries.push_back({i, j, rows[i][j]});
    }
  }
  return SparseIntMatrix(rows.size(), n_cols, std::move(entries));
}

std::int64_t SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{row, col, 0},
                             [](const MatrixEntry& a, const MatrixEntry& b) {
                               return std::tie(a.row, a.col) < std::tie(b.row, b.col);
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(n_rows_,
                                             std::vector<std::int64_t>(n_cols_, 0));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseIntMatrix(n_cols_, n_rows_, std::move(t));
}

SparseIntMatrix SparseIntMatrix::permuted(
    const std::vector<std::size_t>& row_order,
    const std::vector<std::size_t>& col_order) const {
  if (row_order.size() != n_rows_ || col_order.size() != n_cols_) {
    throw std::invalid_argument("permutation size does not match matrix shape");
  }
  std::vector<std::size_t> row_pos(n_rows_), col_pos(n_cols_);
  for (std::size_t k = 0; k < n_rows_; ++k) row_pos[row_order[k]] = k;
  for (std::size_t k = 0; k < n_cols_; ++k) col_pos[col_order[k]] = k;
  std::vector<MatrixEntry> out;
  for (const auto& e : entries_) out.push_back({row_pos[e.row], col_pos[e.col], e.value});
  return SparseIntMatrix(n_rows_, n_cols_, std::move(out));
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const {
  if (n_cols_ != rhs.n_rows_) {
    throw std::invalid_argument("shape mismatch in matrix product: " +
                                std::to_string(n_rows_) + "x" + std::to_string(n_cols_) +
                                " times " + std::to_string(rhs.n_rows_) + "x" +
                                std::to_string(rhs.n_cols_));
  }
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rhs_rows(rhs.n_rows_);
  for (const auto& e : rhs.entries_) rhs_rows[e.row].push_back({e.col, e.value});
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
  for (const auto& e : entries_) {
    for (const auto& [col, v] : rhs_rows[e.col]) acc[{e.row, col}] += e.value * v;
  }
  std::vector<MatrixEntry> out;
  for (const auto& [rc, v] : acc) out.push_back({rc.first, rc.second, v});
  return SparseIntMatrix(n_rows_, rhs.n_cols_, std::move(out));
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& rhs) const {
  if (n_rows_ != rhs.n_rows_ || n_cols_ != rhs.n_cols_) {
    throw std::invalid_argument("shape mismatch in matrix sum");
  }
  auto all = entries_;
  all.insert(all.end(), rhs.entries_.begin(), rhs.entries_.end());
  return SparseIntMatrix(n_rows_, n_cols_, std::move(all));
}

SparseIntMatrix SparseIntMatrix::operator-(const SparseIntMatrix& rhs) const {
  return *this + rhs.scaled(-1);
}

SparseIntMatrix SparseIntMatrix::scaled(std::int64_t factor) const {
  auto out = entries_;
  for (auto& e : out) e.value *= factor;
  return SparseIntMatrix(n_rows_, n_cols_, std::move(out));
}

std::string to_coordinate_text(const SparseIntMatrix& m) {
  std::ostringstream out;
  out << m.n_rows() << ' ' << m.n_cols() << ' ' << m.nonzeros() << '\n';
  for (const auto& e : m.entries()) {
    out << e.row << ' ' << e.col << ' ' << e.value << '\n';
  }
  return out.str();
}

SparseIntMatrix from_coordinate_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) {
    throw std::invalid_argument("coordinate text lacks a 'rows cols nnz' header");
  }
  std::vector<MatrixEntry> entries(nnz);
  for (auto& e : entries) {
    if (!(in >> e.row >> e.col >> e.value)) {
      throw std::invalid_argument("coordinate text ends before " +
                                  std::to_string(nnz) + " entries");
    }
  }
  return SparseIntMatrix(rows, cols, std::move(entries));
}

}  // namespace markgraph
