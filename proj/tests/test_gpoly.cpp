#include "doctest.h"

#include "matpart/algorithms.hpp"
#include "matpart/errors.hpp"
#include "matpart/gpoly.hpp"
#include "matpart/oracle.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace matpart;
using namespace matpart::testing;

namespace {

bool direct_member(const MatroidPtr& m, std::size_t k, ElementSet x) {
  if (!m->independent(x)) return false;
  return brute_k_colorable(*m, k - 1, m->ground() - x);
}

ParamodularPair random_table_pair(Rng& rng, std::size_t n) {
  std::vector<PairEntry> entries;
  for_each_subset(ElementSet::first(n), [&](ElementSet a) {
    const auto p = static_cast<std::int64_t>(uniform_int(rng, 0, 6)) - 3;
    const auto b = static_cast<std::int64_t>(uniform_int(rng, 0, 6)) - 3;
    entries.push_back({a, ExtendedInt::finite(p), ExtendedInt::finite(b)});
  });
  return ParamodularPair::finite_family(n, ElementSet::first(n), std::move(entries));
}

}  // namespace

TEST_CASE("laminar pair values") {
  const LaminarDescription l(2, ElementSet::first(2), {{ElementSet{0, 1}, 1}});
  const auto pair = build_laminar_pair(l, 2);
  REQUIRE(pair.entries().size() == 1);
  CHECK(pair.p(ElementSet{0, 1}) == ExtendedInt::finite(1));
  CHECK(pair.b(ElementSet{0, 1}) == ExtendedInt::finite(1));
  CHECK(pair.p(ElementSet{0}).is_minus_infinity());
  CHECK(pair.b(ElementSet{0}).is_plus_infinity());

  const LaminarDescription tight(3, ElementSet::first(3), {{ElementSet{0, 1, 2}, 1}});
  CHECK_THROWS_AS(build_laminar_pair(tight, 2), PreconditionError);
}

TEST_CASE("laminar pair family equals the split family") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform_int(rng, 1, 10);
    const std::size_t k = uniform_int(rng, 1, 3);
    const auto l = random_feasible_laminar(rng, n, k);
    const auto m = make_laminar(l);
    const auto pair = build_laminar_pair(l, k);
    const auto lower = laminar_power(l, k - 1 == 0 ? 1 : k - 1);
    for_each_subset(l.ground(), [&](ElementSet x) {
      const bool expected =
          k == 1 ? x == l.ground()
                 : laminar_independent(l, x) && laminar_independent(lower, l.ground() - x);
      CHECK(family_membership(pair, x) == expected);
    });
  }
}

TEST_CASE("rank pair construction") {
  const auto k4 = k4_instance();
  CHECK_THROWS_AS(build_rank_pair(k4.graphic, 2), PreconditionError);
  CHECK_THROWS_AS(build_rank_pair(free_matroid(3), 1), PreconditionError);
  const auto assumed = build_rank_pair(k4.graphic, 2, HypothesisPolicy::assume);
  CHECK(assumed.oracle_backed());

  const auto star_pair = build_rank_pair(k4.graphic, 3);
  CHECK(family_membership(star_pair, ElementSet{0, 1, 2}));
  CHECK(k4.graphic->independent(ElementSet{3, 4}));

  const auto free4 = free_matroid(4);
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto pair = build_rank_pair(free4, k);
    for_each_subset(free4->ground(), [&](ElementSet a) {
      CHECK(pair.p(a) == ExtendedInt::finite(0));
      CHECK(pair.b(a) == ExtendedInt::finite(static_cast<std::int64_t>(a.size())));
      CHECK(family_membership(pair, a));
    });
  }
}

TEST_CASE("rank pair family equals the split family") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = uniform_int(rng, 2, 3);
    const MatroidPtr m = random_unspanned_matroid(rng, uniform_int(rng, 1, 7), k);
    const auto pair = build_rank_pair(m, k);
    for_each_subset(m->ground(), [&](ElementSet x) {
      const bool expected = direct_member(m, k, x);
      CHECK(family_membership(pair, x) == expected);
      CHECK(family_membership_by_constraints(pair, x) == expected);
    });
  }
}

TEST_CASE("explicit pairs") {
  const auto empty = ParamodularPair::finite_family(3, ElementSet::first(3), {});
  for_each_subset(ElementSet::first(3), [&](ElementSet x) {
    CHECK(family_membership(empty, x));
  });
  CHECK_THROWS_AS(ParamodularPair::finite_family(
                      2, ElementSet::first(2),
                      {{ElementSet{0}, ExtendedInt::finite(0), ExtendedInt::finite(1)},
                       {ElementSet{0}, ExtendedInt::finite(0), ExtendedInt::finite(1)}}),
                  ValidationError);
}

TEST_CASE("polytope membership") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform_int(rng, 1, 8);
    const std::size_t k = uniform_int(rng, 2, 3);
    const auto l = random_feasible_laminar(rng, n, k);
    const auto pair = build_laminar_pair(l, k);
    CHECK(polytope_membership(pair, RationalVector::uniform(n, l.ground(), k)));
    for_each_subset(l.ground(), [&](ElementSet x) {
      CHECK(polytope_membership(pair, RationalVector::characteristic(n, x)) ==
            family_membership(pair, x));
    });
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = uniform_int(rng, 2, 3);
    const MatroidPtr m = random_unspanned_matroid(rng, uniform_int(rng, 1, 7), k);
    if (!partitionable(repeated(m, k), m->ground())) continue;
    const auto pair = build_rank_pair(m, k);
    CHECK(polytope_membership(pair, RationalVector::uniform(m->universe_size(), m->ground(), k)));
    for_each_subset(m->ground(), [&](ElementSet x) {
      CHECK(polytope_membership(pair, RationalVector::characteristic(m->universe_size(), x)) ==
            family_membership(pair, x));
    });
  }

  const LaminarDescription l(3, ElementSet::first(3), {{ElementSet{0, 1}, 1}});
  const auto pair = build_laminar_pair(l, 2);
  CHECK_FALSE(polytope_membership(pair, RationalVector::characteristic(3, ElementSet::first(3))));
  CHECK_THROWS_AS(RationalVector({Rational(3, 2)}), ValidationError);
}

TEST_CASE("paramodularity of the two constructions") {
  Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = uniform_int(rng, 1, 3);
    const auto l = random_feasible_laminar(rng, uniform_int(rng, 1, 9), k);
    const auto report = check_paramodular(build_laminar_pair(l, k), ParamodularMode::intersecting);
    CHECK(report.passed());
  }
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = uniform_int(rng, 2, 3);
    const MatroidPtr m = random_unspanned_matroid(rng, uniform_int(rng, 1, 7), k);
    CHECK(check_paramodular(build_rank_pair(m, k), ParamodularMode::full).passed());
  }
  // Outside the hypothesis the check still runs; its verdict concerns this
  // instance only.
  const auto k4 = k4_instance();
  const auto report =
      check_paramodular(build_rank_pair(k4.graphic, 2, HypothesisPolicy::assume),
                        ParamodularMode::full);
  CHECK(report.violation_count == report.count("(i)") + report.count("submodular") +
                                      report.count("supermodular") + report.count("cross"));
}

TEST_CASE("paramodular checks report witnesses") {
  // b not submodular on {0},{1}: 1 + 1 < 3 + 0.
  std::vector<PairEntry> entries{
      {ElementSet{}, ExtendedInt::finite(0), ExtendedInt::finite(0)},
      {ElementSet{0}, ExtendedInt::finite(0), ExtendedInt::finite(1)},
      {ElementSet{1}, ExtendedInt::finite(0), ExtendedInt::finite(1)},
      {ElementSet{0, 1}, ExtendedInt::finite(0), ExtendedInt::finite(3)}};
  const auto pair = ParamodularPair::finite_family(2, ElementSet::first(2), entries);
  const auto report = check_paramodular(pair, ParamodularMode::full);
  CHECK(report.contains({"submodular", {ElementSet{0}, ElementSet{1}}, {}}));
  CHECK(check_paramodular(pair, ParamodularMode::intersecting).count("submodular") == 0);
}

TEST_CASE("local cross inequality") {
  Rng rng(45);
  std::size_t local_failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto pair = random_table_pair(rng, uniform_int(rng, 1, 4));
    const bool local = check_local_cross(pair).passed();
    const bool full = check_cross(pair, ParamodularMode::full).passed();
    CHECK(local == full);
    if (!local) ++local_failures;
  }
  CHECK(local_failures > 0);

  // A pair violating the local form at (∅, ∅, 0) also fails the full form.
  std::vector<PairEntry> entries{
      {ElementSet{}, ExtendedInt::finite(0), ExtendedInt::finite(0)},
      {ElementSet{0}, ExtendedInt::finite(2), ExtendedInt::finite(1)}};
  const auto bad = ParamodularPair::finite_family(1, ElementSet::first(1), entries);
  const auto local = check_local_cross(bad);
  CHECK(local.contains({"local-cross", {ElementSet{}, ElementSet{}}, {0}}));
  CHECK_FALSE(check_cross(bad, ParamodularMode::full).passed());

  const LaminarDescription l(2, ElementSet::first(2), {{ElementSet{0, 1}, 1}});
  CHECK_THROWS_AS(check_local_cross(build_laminar_pair(l, 2)), PreconditionError);
}

TEST_CASE("local form passes whenever the full form does") {
  Rng rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = uniform_int(rng, 2, 3);
    const MatroidPtr m = random_unspanned_matroid(rng, uniform_int(rng, 1, 6), k);
    const auto pair = build_rank_pair(m, k);
    CHECK(check_cross(pair, ParamodularMode::full).passed());
    CHECK(check_local_cross(pair).passed());
  }
}

TEST_CASE("generalized-matroid axioms") {
  const std::vector<ElementSet> cube{ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{0, 1}};
  CHECK(gmatroid_axioms_check(cube, ElementSet::first(2)).passed());

  const auto empty = gmatroid_axioms_check(std::vector<ElementSet>{}, ElementSet::first(2));
  CHECK(empty.passed());
  CHECK_FALSE(empty.notes.empty());

  // {∅, {0,1}} fails (J1) at X = ∅, Y = {0,1}, e = 0.
  const std::vector<ElementSet> gap{ElementSet{}, ElementSet{0, 1}};
  CHECK(gmatroid_axioms_check(gap, ElementSet::first(2))
            .contains({"(J1)", {ElementSet{}, ElementSet{0, 1}}, {0}}));

  const auto fig = reconstruct_figure1();
  const MatroidPtr m = fig.matroid;
  const auto j = bf_enumerate_family(
      [&](ElementSet x) { return m->independent(x) && m->independent(m->ground() - x); },
      m->ground());
  const auto report = gmatroid_axioms_check(j, m->ground());
  CHECK(report.contains({"(J1)", {fig.x, fig.y}, {fig.e}}));

  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = uniform_int(rng, 1, 3);
    const auto l = random_feasible_laminar(rng, uniform_int(rng, 1, 8), k);
    const auto pair = build_laminar_pair(l, k);
    REQUIRE(check_paramodular(pair, ParamodularMode::intersecting).passed());
    const auto f = bf_enumerate_family([&](ElementSet x) { return family_membership(pair, x); },
                                       l.ground());
    REQUIRE_FALSE(f.empty());
    CHECK(gmatroid_axioms_check(f, l.ground()).passed());
  }
}

TEST_CASE("pair checks respect the size threshold") {
  const auto big = ParamodularPair::finite_family(14, ElementSet::first(14), {});
  CHECK_THROWS_AS(check_paramodular(big, ParamodularMode::full), CapacityError);
}
