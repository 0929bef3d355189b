#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "markgraph/complex.hpp"
#include "markgraph/homology.hpp"
#include "markgraph/sparse.hpp"
#include "oracle.hpp"

using namespace markgraph;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                   int zero_percent) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_int_distribution<int> percent(0, 99);
  Dense m(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : m) {
    for (auto& x : row) x = percent(rng) < zero_percent ? 0 : value(rng);
  }
  return m;
}

BigMatrix to_big(const Dense& m) {
  BigMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  BigMatrix out(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// U M V is diagonal with the invariant factors leading, U and V unimodular.
void check_decomposition(const Dense& m) {
  const auto dec = smith_decomposition(SparseIntMatrix::from_dense(m));
  const auto product = multiply(multiply(dec.left, to_big(m)), dec.right);
  const auto& factors = dec.result.invariant_factors;
  for (std::size_t i = 0; i < product.size(); ++i) {
    for (std::size_t j = 0; j < product[i].size(); ++j) {
      const BigInt expected = (i == j && i < factors.size()) ? factors[i] : BigInt(0);
      REQUIRE(product[i][j] == expected);
    }
  }
  for (std::size_t i = 1; i < factors.size(); ++i) CHECK(factors[i] % factors[i - 1] == 0);
  CHECK(abs(oracle::bareiss_determinant(dec.left)) == 1);
  CHECK(abs(oracle::bareiss_determinant(dec.right)) == 1);
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("sparse matrices") {
  const auto a = SparseIntMatrix::from_dense({{1, 0, 2}, {0, -1, 0}});
  CHECK(a.at(0, 2) == 2);
  CHECK(a.nonzeros() == 3);
  CHECK(a.transposed().at(2, 0) == 2);
  CHECK((a * a.transposed()).to_dense() == Dense{{5, 0}, {0, 1}});
  CHECK((a - a).is_zero());
  CHECK(a.scaled(3).at(1, 1) == -3);
  CHECK_THROWS(a * a);
  CHECK_THROWS_AS(SparseIntMatrix(1, 1, {{2, 0, 1}}), std::out_of_range);
  const SparseIntMatrix merged(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, 4}});
  CHECK(merged.nonzeros() == 1);
  CHECK(from_coordinate_text(to_coordinate_text(a)) == a);
  CHECK(a.permuted({1, 0}, {2, 1, 0}).at(1, 0) == 2);
}

TEST_CASE("smith normal form of small matrices") {
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}})).invariant_factors ==
        std::vector<BigInt>{2, 4});
  CHECK(smith_normal_form(SparseIntMatrix(3, 4)).rank == 0);
  CHECK(smith_normal_form(SparseIntMatrix(0, 5)).rank == 0);
  const auto r = smith_normal_form(SparseIntMatrix::from_dense({{1, 1}, {1, -1}}));
  CHECK(r.invariant_factors == std::vector<BigInt>{1, 2});
  CHECK_FALSE(r.used_big_integers);
}

TEST_CASE("smith normal form falls back to big integers on overflow") {
  const std::int64_t a = 4000000000;
  const auto m = SparseIntMatrix::from_dense({{a, 1}, {1, a}});
  const auto r = smith_normal_form(m);
  CHECK(r.used_big_integers);
  CHECK(r.invariant_factors == std::vector<BigInt>{1, BigInt(a) * a - 1});
  check_decomposition({{a, 1}, {1, a}});
}

TEST_CASE("invariant factors match gcds of minors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = 1 + rng() % 5;
    const auto cols = 1 + rng() % 5;
    const auto m = random_dense(rng, rows, cols, -4, 4, 30);
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(m)).invariant_factors ==
          oracle::determinantal_invariant_factors(m));
  }
}

TEST_CASE("decompositions of random sign matrices") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_dense(rng, 1 + rng() % 25, 1 + rng() % 25, -1, 1, 40);
    check_decomposition(m);
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(m)).rank == oracle::rational_rank(m));
  }
}

TEST_CASE("rank modulo a prime") {
  const auto two = SparseIntMatrix::from_dense({{2, 0}, {0, 3}});
  CHECK(rank_mod_p(two, 2) == 1);
  CHECK(rank_mod_p(two, 3) == 1);
  CHECK(rank_mod_p(two, 5) == 2);
  CHECK_THROWS_AS(rank_mod_p(two, 4), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_dense(rng, 1 + rng() % 12, 1 + rng() % 12, -1, 1, 50);
    CHECK(rank_mod_p(SparseIntMatrix::from_dense(m), 1000003) == oracle::rational_rank(m));
  }
}

TEST_CASE("cohomology of hand-built complexes") {
  // Z --2--> Z: nothing in degree 0, Z/2 in degree 1
  const auto report = cohomology({1, 1}, {SparseIntMatrix::from_dense({{2}}), SparseIntMatrix(0, 1)});
  REQUIRE(report.degrees.size() == 2);
  CHECK(report.degrees[0].free_rank == 0);
  CHECK(report.degrees[1].free_rank == 0);
  CHECK(report.degrees[1].torsion == std::vector<BigInt>{2});
  CHECK_FALSE(report.torsion_free());
  CHECK(report.euler() == 0);

  const auto point = cohomology({1, 2, 1}, {SparseIntMatrix::from_dense({{0}, {0}}),
                                            SparseIntMatrix::from_dense({{1, 1}}),
                                            SparseIntMatrix(0, 1)});
  CHECK(point.degrees[0].free_rank == 1);
  CHECK(point.degrees[1].free_rank == 1);
  CHECK_FALSE(point.is_point());
  CHECK(point.euler() == point.euler_of_ranks());
}

TEST_CASE("a non-complex is rejected with the offending entry") {
  const auto f = SparseIntMatrix::from_dense({{1}});
  CHECK_THROWS_AS(cohomology({1, 1, 1}, {f, f, SparseIntMatrix(0, 1)}), ComplexError);
  CHECK_THROWS_WITH(cohomology({1, 1, 1}, {f, f, SparseIntMatrix(0, 1)}),
                    doctest::Contains("maps 0 and 1"));
  CHECK_THROWS(cohomology({2, 1}, {f, SparseIntMatrix(0, 1)}));
}

TEST_CASE("cohomology is invariant under basis permutations") {
  const auto cs = mixed_conflict_system(fixtures::dumbbell());
  const auto c = build_complex(cs, DifferentialKind::total);
  const auto reference = cohomology(c.dims(), c.maps);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<std::size_t>> perms;
    for (auto d : c.dims()) {
      std::vector<std::size_t> p(d);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(std::move(p));
    }
    std::vector<SparseIntMatrix> maps;
    for (std::size_t n = 0; n < c.maps.size(); ++n) {
      const std::vector<std::size_t> rows = n + 1 < perms.size() ? perms[n + 1]
                                                                 : std::vector<std::size_t>{};
      maps.push_back(c.maps[n].permuted(rows, perms[n]));
    }
    CHECK(cohomology(c.dims(), maps) == reference);
  }
  CHECK(reference.is_point());
}

TEST_CASE("direct sums add degreewise") {
  const auto a = cohomology({1}, {SparseIntMatrix(0, 1)});
  const auto b = cohomology({1, 1}, {SparseIntMatrix(1, 1), SparseIntMatrix(0, 1)});
  const auto s = direct_sum(a, b);
  REQUIRE(s.degrees.size() == 2);
  CHECK(s.degrees[0].free_rank == 2);
  CHECK(s.degrees[1].free_rank == 1);
  CHECK(s.degrees[0].dim == 2);
}

TEST_CASE("delta-only homology") {
  for (const auto& cs : {fixtures::kite_vertices(), fixtures::triangle_conflicts(),
                         edge_conflict_system(fixtures::k4())}) {
    CHECK(mu_homology(cs).is_point());
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto block = mu_homology(vertex_conflict_system(n, {}), MuScope::fully_marked);
    for (const auto& d : block.degrees) {
      CHECK(d.free_rank == 0);
      CHECK(d.torsion.empty());
    }
  }
  // the empty system on zero elements is a point
  CHECK(mu_homology(vertex_conflict_system(0, {}), MuScope::fully_marked).is_point());
}

}  // TEST_SUITE
