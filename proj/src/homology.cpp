#include "markgraph/homology.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "markgraph/complex.hpp"

namespace markgraph {

namespace {

struct Overflow {};

template <typename Int>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -a;
  }
  static std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }
  static std::int64_t div(std::int64_t a, std::int64_t b) {
    if (b == -1) return neg(a);
    return a / b;
  }
  static std::int64_t mod(std::int64_t a, std::int64_t b) {
    if (b == -1) return 0;
    return a % b;
  }
};

template <>
struct Arith<BigInt> {
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt neg(const BigInt& a) { return -a; }
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
  static BigInt div(const BigInt& a, const BigInt& b) { return a / b; }
  static BigInt mod(const BigInt& a, const BigInt& b) { return a % b; }
};

template <typename Int>
using Dense = std::vector<std::vector<Int>>;

template <typename Int>
Dense<Int> identity(std::size_t n) {
  Dense<Int> out(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Int(1);
  return out;
}

/// s*a + t*b = g with g = gcd(a, b) > 0; a != 0.
template <typename Int>
void extended_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  using A = Arith<Int>;
  Int old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    Int q = A::div(old_r, r);
    Int tmp = A::sub(old_r, A::mul(q, r));
    old_r = r;
    r = tmp;
    tmp = A::sub(old_s, A::mul(q, cur_s));
    old_s = cur_s;
    cur_s = tmp;
    tmp = A::sub(old_t, A::mul(q, cur_t));
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = A::neg(old_r);
    old_s = A::neg(old_s);
    old_t = A::neg(old_t);
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

template <typename Int>
class SmithReducer {
  using A = Arith<Int>;

 public:
  SmithReducer(Dense<Int> a, std::size_t rows, std::size_t cols, bool track)
      : a_(std::move(a)), rows_(rows), cols_(cols), track_(track) {
    if (track_) {
      u_ = identity<Int>(rows_);
      v_ = identity<Int>(cols_);
    }
  }

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_pivot(t)) break;
      while (true) {
        clear_column(t);
        clear_row(t);
        if (column_has_entries(t)) continue;
        if (auto bad = non_divisible(t)) {
          add_row(t, *bad, Int(1));
          continue;
        }
        break;
      }
      if (a_[t][t] < 0) negate_row(t);
      factors_.push_back(a_[t][t]);
    }
  }

  const std::vector<Int>& factors() const { return factors_; }
  const Dense<Int>& left() const { return u_; }
  const Dense<Int>& right() const { return v_; }

 private:
  bool bring_pivot(std::size_t t) {
    bool found = false;
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        Int mag = A::abs(a_[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) return false;
    swap_rows(t, pr);
    swap_cols(t, pc);
    return true;
  }

  void clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      const Int p = a_[t][t];
      const Int b = a_[i][t];
      if (A::mod(b, p) == 0) {
        add_row(i, t, A::neg(A::div(b, p)));
      } else {
        Int g, s, x;
        extended_gcd(p, b, g, s, x);
        combine_rows(t, i, s, x, A::neg(A::div(b, g)), A::div(p, g));
      }
    }
  }

  void clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      const Int p = a_[t][t];
      const Int b = a_[t][j];
      if (A::mod(b, p) == 0) {
        add_col(j, t, A::neg(A::div(b, p)));
      } else {
        Int g, s, x;
        extended_gcd(p, b, g, s, x);
        combine_cols(t, j, s, x, A::neg(A::div(b, g)), A::div(p, g));
      }
    }
  }

  bool column_has_entries(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] != 0) return true;
    }
    return false;
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    const Int& p = a_[t][t];
    if (p == 1 || p == -1) return std::nullopt;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[i][j] != 0 && A::mod(a_[i][j], p) != 0) return i;
      }
    }
    return std::nullopt;
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    row_axpy(a_, dst, src, k);
    if (track_) row_axpy(u_, dst, src, k);
  }

  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    col_axpy(a_, dst, src, k);
    if (track_) col_axpy(v_, dst, src, k);
  }

  static void row_axpy(Dense<Int>& m, std::size_t dst, std::size_t src, const Int& k) {
    auto& d = m[dst];
    const auto& s = m[src];
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (s[j] != 0) d[j] = A::add(d[j], A::mul(k, s[j]));
    }
  }

  static void col_axpy(Dense<Int>& m, std::size_t dst, std::size_t src, const Int& k) {
    for (auto& row : m) {
      if (row[src] != 0) row[dst] = A::add(row[dst], A::mul(k, row[src]));
    }
  }

  // [row_x; row_y] <- [[s, t], [c, d]] [row_x; row_y], determinant 1.
  void combine_rows(std::size_t x, std::size_t y, const Int& s, const Int& t, const Int& c,
                    const Int& d) {
    combine_rows_in(a_, x, y, s, t, c, d);
    if (track_) combine_rows_in(u_, x, y, s, t, c, d);
  }

  void combine_cols(std::size_t x, std::size_t y, const Int& s, const Int& t, const Int& c,
                    const Int& d) {
    combine_cols_in(a_, x, y, s, t, c, d);
    if (track_) combine_cols_in(v_, x, y, s, t, c, d);
  }

  static void combine_rows_in(Dense<Int>& m, std::size_t x, std::size_t y, const Int& s,
                              const Int& t, const Int& c, const Int& d) {
    auto& rx = m[x];
    auto& ry = m[y];
    for (std::size_t j = 0; j < rx.size(); ++j) {
      if (rx[j] == 0 && ry[j] == 0) continue;
      Int nx = A::add(A::mul(s, rx[j]), A::mul(t, ry[j]));
      Int ny = A::add(A::mul(c, rx[j]), A::mul(d, ry[j]));
      rx[j] = std::move(nx);
      ry[j] = std::move(ny);
    }
  }

  static void combine_cols_in(Dense<Int>& m, std::size_t x, std::size_t y, const Int& s,
                              const Int& t, const Int& c, const Int& d) {
    for (auto& row : m) {
      if (row[x] == 0 && row[y] == 0) continue;
      Int nx = A::add(A::mul(s, row[x]), A::mul(t, row[y]));
      Int ny = A::add(A::mul(c, row[x]), A::mul(d, row[y]));
      row[x] = std::move(nx);
      row[y] = std::move(ny);
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a_[x], a_[y]);
    if (track_) std::swap(u_[x], u_[y]);
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a_) std::swap(row[x], row[y]);
    if (track_) {
      for (auto& row : v_) std::swap(row[x], row[y]);
    }
  }

  void negate_row(std::size_t x) {
    for (auto& e : a_[x]) e = A::neg(e);
    if (track_) {
      for (auto& e : u_[x]) e = A::neg(e);
    }
  }

  Dense<Int> a_;
  std::size_t rows_;
  std::size_t cols_;
  bool track_;
  Dense<Int> u_;
  Dense<Int> v_;
  std::vector<Int> factors_;
};

template <typename Int>
Dense<Int> densify(const SparseIntMatrix& m) {
  Dense<Int> out(m.n_rows(), std::vector<Int>(m.n_cols(), Int(0)));
  for (const auto& e : m.entries()) out[e.row][e.col] = Int(e.value);
  return out;
}

template <typename Int>
BigMatrix to_big(const Dense<Int>& m) {
  BigMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

SNFDecomposition reduce(const SparseIntMatrix& m, bool track) {
  SNFDecomposition out;
  try {
    SmithReducer<std::int64_t> r(densify<std::int64_t>(m), m.n_rows(), m.n_cols(), track);
    r.run();
    out.result.invariant_factors.assign(r.factors().begin(), r.factors().end());
    if (track) {
      out.left = to_big(r.left());
      out.right = to_big(r.right());
    }
  } catch (const Overflow&) {
    SmithReducer<BigInt> r(densify<BigInt>(m), m.n_rows(), m.n_cols(), track);
    r.run();
    out.result.invariant_factors = r.factors();
    out.result.used_big_integers = true;
    if (track) {
      out.left = r.left();
      out.right = r.right();
    }
  }
  out.result.rank = out.result.invariant_factors.size();
  return out;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) { return reduce(m, false).result; }

SNFDecomposition smith_decomposition(const SparseIntMatrix& m) { return reduce(m, true); }

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  std::vector<std::vector<std::uint64_t>> a(m.n_rows(),
                                            std::vector<std::uint64_t>(m.n_cols(), 0));
  for (const auto& e : m.entries()) {
    std::int64_t v = e.value % static_cast<std::int64_t>(p);
    if (v < 0) v += p;
    a[e.row][e.col] = static_cast<std::uint64_t>(v);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.n_cols() && rank < m.n_rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.n_rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.n_rows()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][col], p - 2, p);
    for (std::size_t i = rank + 1; i < m.n_rows(); ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col] * inv % p;
      for (std::size_t j = col; j < m.n_cols(); ++j) {
        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

long CohomologyReport::euler() const {
  long total = 0;
  for (const auto& d : degrees) total += (d.n % 2 == 0 ? 1 : -1) * static_cast<long>(d.dim);
  return total;
}

long CohomologyReport::euler_of_ranks() const {
  long total = 0;
  for (const auto& d : degrees) {
    total += (d.n % 2 == 0 ? 1 : -1) * static_cast<long>(d.free_rank);
  }
  return total;
}

bool CohomologyReport::torsion_free() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeReport& d) { return d.torsion.empty(); });
}

bool CohomologyReport::is_point() const {
  if (!torsion_free() || degrees.empty()) return false;
  for (const auto& d : degrees) {
    if (d.free_rank != (d.n == 0 ? 1u : 0u)) return false;
  }
  return degrees.front().n == 0;
}

CohomologyReport cohomology(const std::vector<std::size_t>& dims,
                            const std::vector<SparseIntMatrix>& coboundaries) {
  const std::size_t top = dims.size();
  for (std::size_t n = 0; n < coboundaries.size(); ++n) {
    const auto& m = coboundaries[n];
    const std::size_t src = n < top ? dims[n] : 0;
    const std::size_t dst = n + 1 < top ? dims[n + 1] : 0;
    if (m.n_cols() != src || m.n_rows() != dst) {
      throw ComplexError("coboundary " + std::to_string(n) + " has shape " +
                         std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols()) +
                         ", expected " + std::to_string(dst) + "x" +
                         std::to_string(src));
    }
  }
  for (std::size_t n = 0; n + 1 < coboundaries.size(); ++n) {
    const auto product = coboundaries[n + 1] * coboundaries[n];
    if (!product.is_zero()) {
      const auto& e = product.entries().front();
      throw ComplexError("maps " + std::to_string(n) + " and " + std::to_string(n + 1) +
                         " compose to a nonzero matrix: entry (" + std::to_string(e.row) +
                         "," + std::to_string(e.col) + ") = " + std::to_string(e.value));
    }
  }

  std::vector<SNFResult> snf(top);
  for (std::size_t n = 0; n < top && n < coboundaries.size(); ++n) {
    snf[n] = smith_normal_form(coboundaries[n]);
  }
  CohomologyReport report;
  for (std::size_t n = 0; n < top; ++n) {
    DegreeReport d;
    d.n = n;
    d.dim = dims[n];
    const std::size_t out_rank = snf[n].rank;
    const std::size_t in_rank = n > 0 ? snf[n - 1].rank : 0;
    d.free_rank = dims[n] - out_rank - in_rank;
    if (n > 0) {
      for (const auto& f : snf[n - 1].invariant_factors) {
        if (f > 1) d.torsion.push_back(f);
      }
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

CohomologyReport direct_sum(const CohomologyReport& a, const CohomologyReport& b) {
  CohomologyReport out;
  const std::size_t top = std::max(a.degrees.size(), b.degrees.size());
  for (std::size_t n = 0; n < top; ++n) {
    DegreeReport d;
    d.n = n;
    for (const auto* r : {&a, &b}) {
      if (n >= r->degrees.size()) continue;
      const auto& x = r->degrees[n];
      d.dim += x.dim;
      d.free_rank += x.free_rank;
      d.torsion.insert(d.torsion.end(), x.torsion.begin(), x.torsion.end());
    }
    std::sort(d.torsion.begin(), d.torsion.end());
    out.degrees.push_back(std::move(d));
  }
  return out;
}

CohomologyReport mu_homology(const ConflictSystem& cs, MuScope scope) {
  // Group markings by the number of 1-marks.
  std::vector<std::vector<Marking>> by_ones;
  for (std::size_t degree = 0; degree <= top_degree(cs); ++degree) {
    for (auto& m : graded_basis(cs, degree)) {
      if (scope == MuScope::fully_marked && m.marked_count() != cs.size()) continue;
      const std::size_t k = m.count(1);
      if (by_ones.size() <= k) by_ones.resize(k + 1);
      by_ones[k].push_back(std::move(m));
    }
  }
  for (auto& group : by_ones) std::sort(group.begin(), group.end());
  if (by_ones.empty()) return {};

  // delta lowers the number of 1-marks; read the chain complex backwards
  // as a cochain complex in c = K - k.
  const std::size_t K = by_ones.size() - 1;
  std::vector<std::size_t> dims;
  std::vector<SparseIntMatrix> maps;
  for (std::size_t c = 0; c <= K; ++c) {
    const std::size_t k = K - c;
    dims.push_back(by_ones[k].size());
    static const std::vector<Marking> none;
    const auto& target = k > 0 ? by_ones[k - 1] : none;
    maps.push_back(matrix_of(by_ones[k], target, [&](const Marking& m) {
      return apply_delta(cs, m);
    }));
  }
  auto reversed = cohomology(dims, maps);
  CohomologyReport out;
  for (std::size_t k = 0; k <= K; ++k) {
    auto d = reversed.degrees[K - k];
    d.n = k;
    out.degrees.push_back(std::move(d));
  }
  return out;
}

}  // namespace markgraph
