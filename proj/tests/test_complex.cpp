#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "markgraph/complex.hpp"
#include "markgraph/enumerate.hpp"
#include "oracle.hpp"

using namespace markgraph;

namespace {

Marking mk(const char* s) { return Marking::from_string(s); }

Chain chain(const ConflictSystem& cs, std::initializer_list<std::pair<const char*, int>> terms) {
  Chain c(cs.label());
  for (const auto& [m, k] : terms) c.add(mk(m), k);
  return c;
}

std::vector<Marking> all_markings(const ConflictSystem& cs) {
  std::vector<Marking> out;
  for (std::size_t n = 0; n <= top_degree(cs); ++n) {
    for (auto& m : graded_basis(cs, n)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("markings") {
  const auto m = mk("0120");
  CHECK(m.count(1) == 1);
  CHECK(m.marked_count() == 2);
  CHECK(m.with_value(0, 2).key() == "2120");
  CHECK_THROWS_AS(Marking::from_string("013"), std::invalid_argument);
  const auto cs = edge_conflict_system(fixtures::dumbbell());
  CHECK(is_admissible(cs, mk("10010")));
  CHECK_FALSE(is_admissible(cs, mk("11000")));
  CHECK_THROWS_AS(apply(cs, DifferentialKind::D, mk("10100")), std::invalid_argument);
  CHECK(is_blocked(cs, mk("10000"), 2));
  CHECK_FALSE(is_blocked(cs, mk("10000"), 3));
  CHECK(bigrade(cs, mk("12010")) == Bigrade{2, 1});
}

TEST_CASE("chains drop zero coefficients") {
  Chain a("x");
  a.add(mk("10"), 2);
  a.add(mk("10"), -2);
  CHECK(a.is_zero());
  a.add(mk("01"), 3);
  CHECK((a - a).is_zero());
  CHECK((a + a).coefficient(mk("01")) == 6);
  CHECK((-a).coefficient(mk("01")) == -3);
}

TEST_CASE("edge marking example on the dumbbell") {
  const auto cs = edge_conflict_system(fixtures::dumbbell());
  const auto m = mk("10000");
  const auto s = apply(cs, DifferentialKind::d, m);
  const auto sigma = apply(cs, DifferentialKind::delta, m);
  CHECK(s == chain(cs, {{"10020", -1}, {"10002", -1}}));
  CHECK(sigma == chain(cs, {{"20000", -1}}));
  const auto sigma_s = apply(cs, DifferentialKind::delta, s);
  CHECK(sigma_s == chain(cs, {{"20020", -1}, {"20002", -1}}));
  CHECK(sigma_s == -apply(cs, DifferentialKind::d, sigma));
}

TEST_CASE("cycle marking example on the dumbbell") {
  const auto cs = cycle_conflict_system(fixtures::dumbbell());
  const auto m = mk("01");
  const auto t = apply(cs, DifferentialKind::d, m);
  const auto tau = apply(cs, DifferentialKind::delta, m);
  CHECK(t == chain(cs, {{"21", 1}}));
  CHECK(tau == chain(cs, {{"02", -1}}));
  CHECK(apply(cs, DifferentialKind::delta, t) == chain(cs, {{"22", 1}}));
  CHECK(apply(cs, DifferentialKind::delta, t) == -apply(cs, DifferentialKind::d, tau));
  // mirrored variant: first cycle 1-marked
  CHECK(apply(cs, DifferentialKind::d, mk("10")) == chain(cs, {{"12", -1}}));
}

TEST_CASE("vertex marking example") {
  const auto cs = fixtures::kite_vertices();
  const auto m = mk("00010");
  CHECK(apply(cs, DifferentialKind::d, m) ==
        chain(cs, {{"20010", 1}, {"02010", 1}, {"00012", -1}}));
  CHECK(apply(cs, DifferentialKind::delta, m) == chain(cs, {{"00020", -1}}));
  const auto left = apply(cs, DifferentialKind::delta, apply(cs, DifferentialKind::d, m));
  const auto right = apply(cs, DifferentialKind::d, apply(cs, DifferentialKind::delta, m));
  CHECK(left == -right);
  CHECK_FALSE(left.is_zero());
}

TEST_CASE("a 1-mark on a clique admits no d term") {
  const auto cs = fixtures::triangle_conflicts();
  CHECK(apply(cs, DifferentialKind::d, mk("100")).is_zero());
}

TEST_CASE("differentials agree with the reference sign formulas") {
  std::vector<ConflictSystem> systems = {fixtures::kite_vertices(),
                                         edge_conflict_system(fixtures::k4()),
                                         cycle_conflict_system(fixtures::k4()),
                                         mixed_conflict_system(fixtures::dumbbell())};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    systems.push_back(oracle::random_system(8, 35, seed));
  }
  for (const auto& cs : systems) {
    for (const auto& m : all_markings(cs)) {
      CHECK(apply(cs, DifferentialKind::delta, m) == oracle::reference_delta(cs, m));
      CHECK(apply(cs, DifferentialKind::d, m) == oracle::reference_d(cs, m));
      CHECK(apply(cs, DifferentialKind::D, m) ==
            oracle::reference_delta(cs, m) + oracle::reference_d(cs, m));
    }
  }
}

TEST_CASE("sector differentials split the mixed system") {
  const auto cs = mixed_conflict_system(fixtures::dumbbell());
  // edge e4 and cycle c1 2-marked: T picks up the (-1)^2 factor
  const auto m = mk("0001010");
  const auto s = apply(cs, DifferentialKind::edge_sector, m);
  const auto t = apply(cs, DifferentialKind::cycle_sector, m);
  CHECK(apply(cs, DifferentialKind::total, m) == s + t);
  const auto odd = mk("0002010");
  CHECK(apply(cs, DifferentialKind::total, odd) ==
        apply(cs, DifferentialKind::edge_sector, odd) -
            apply(cs, DifferentialKind::cycle_sector, odd));
}

TEST_CASE("graded bases cover every admissible marking once") {
  for (const auto& m : enumerate_graphs({3, 2, true})) {
    for (const auto& cs : {edge_conflict_system(m.graph), cycle_conflict_system(m.graph),
                           mixed_conflict_system(m.graph)}) {
      std::size_t total = 0;
      for (std::size_t n = 0; n <= top_degree(cs); ++n) total += graded_basis(cs, n).size();
      CHECK(total == admissible_marking_count(cs));
      CHECK(graded_basis(cs, top_degree(cs) + 1).empty());
      const auto c = build_complex(cs, DifferentialKind::D);
      CHECK(c.bases.size() == top_degree(cs) + 1);
    }
  }
}

TEST_CASE("bigraded basis") {
  const auto cs = edge_conflict_system(fixtures::dumbbell());
  const auto b = graded_basis(cs, Bigrade{1, 1});
  CHECK(b.size() == 8);  // 4 disjoint pairs, two ways to choose the 2-mark
  for (const auto& m : b) CHECK(bigrade(cs, m) == Bigrade{1, 1});
}

TEST_CASE("differential matrices") {
  const auto cs = edge_conflict_system(fixtures::bubble());
  const auto dm = differential_matrix(cs, DifferentialKind::D, 0);
  CHECK(dm.cols.size() == 3);
  CHECK(dm.rows.size() == 2);
  CHECK_THROWS_AS(differential_matrix(cs, DifferentialKind::D, 2), std::out_of_range);
  CHECK(differential_kind_from_string("S") == DifferentialKind::edge_sector);
  CHECK_THROWS_AS(differential_kind_from_string("Q"), std::invalid_argument);
  CHECK(sign_fault_from_string("d-term") == SignFault::d_term);
}

TEST_CASE("exp generators equal the power series of the one-mark generator") {
  std::vector<std::pair<ConflictSystem, std::vector<Sector>>> cases = {
      {edge_conflict_system(fixtures::dumbbell()), {Sector::edge}},
      {cycle_conflict_system(fixtures::k4()), {Sector::cycle}},
      {vertex_conflict_system(fixtures::k4()), {Sector::vertex}},
      {mixed_conflict_system(fixtures::dumbbell()), {Sector::edge, Sector::cycle}},
      {mixed_conflict_system(fixtures::dumbbell()), {Sector::edge}},
      {fixtures::kite_vertices(), {Sector::vertex}}};
  for (const auto& m : enumerate_graphs({2, 2, true})) {
    cases.push_back({mixed_conflict_system(m.graph), {Sector::edge, Sector::cycle}});
  }
  for (const auto& [cs, sectors] : cases) {
    const auto direct = exp_generator(cs, sectors);
    CHECK(direct == oracle::exp_by_power_series(cs, sectors));
    for (const auto& [m, c] : direct.terms()) {
      CHECK(c == 1);
      CHECK(m.count(2) == 0);
    }
  }
}

TEST_CASE("one-mark generator") {
  const auto cs = edge_conflict_system(fixtures::dumbbell());
  const auto g = one_mark_generator(cs, mk("10000"));
  CHECK(g == chain(cs, {{"10010", 1}, {"10001", 1}}));
  const auto mixed = mixed_conflict_system(fixtures::dumbbell());
  // a marked edge blocks the cycle through it
  CHECK(one_mark_generator(mixed, mk("1000000"), Sector::cycle) ==
        chain(mixed, {{"1000001", 1}}));
}

TEST_CASE("transport to the vertex model") {
  const auto cs = edge_conflict_system(fixtures::dumbbell());
  const auto model = vertex_model(cs);
  // line graph of the dumbbell: a triangle and a triangle sharing edge 3
  CHECK(model.conflict_pairs().size() == 6);
  const Transport psi(cs, model);
  CHECK(psi(mk("10000")).key() == "10000");
  CHECK(psi.inverse(mk("20010")).key() == "20010");
  CHECK_THROWS_AS(Transport(cs, fixtures::kite_vertices()), std::invalid_argument);
  CHECK_THROWS_AS(Transport(cs, cs), std::invalid_argument);
  const auto cycles = cycle_conflict_system(fixtures::dumbbell());
  CHECK(vertex_model(cycles).conflict_pairs().empty());
}

}  // TEST_SUITE
