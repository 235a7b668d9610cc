#include "doctest.h"

#include "matpart/algorithms.hpp"
#include "matpart/errors.hpp"
#include "matpart/gpoly.hpp"
#include "matpart/limits.hpp"
#include "matpart/oracle.hpp"
#include "matpart/partitioner.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace matpart;
using namespace matpart::testing;

TEST_CASE("exhaustive partition search") {
  const auto free4 = free_matroid(4);
  const auto r = bf_partition_exists(*free4, *free4, 2);
  CHECK(r.found);
  REQUIRE(r.partition);
  CHECK(r.partition->size() == 2);

  const auto k4 = k4_instance();
  const auto none = bf_partition_exists(*k4.graphic, *k4.matching_partition, 2);
  CHECK_FALSE(none.found);
  CHECK(none.nodes_explored > 0);
  CHECK(bf_partition_exists(*k4.graphic, *k4.matching_partition, 3).found);

  const Limits saved = limits();
  Limits tight = saved;
  tight.brute_force = 3;
  set_limits(tight);
  CHECK_THROWS_AS(bf_partition_exists(*free4, *free4, 2), CapacityError);
  set_limits(saved);
}

TEST_CASE("exhaustive search agrees with partition_common on laminar pairs") {
  Rng rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = uniform_int(rng, 1, 10);
    const std::size_t k = uniform_int(rng, 1, 3);
    const auto m1 = make_laminar(random_feasible_laminar(rng, n, k));
    const auto m2 = make_laminar(random_feasible_laminar(rng, n, k));
    const auto plan = validate_plan(m1, m2, k, Mode::laminar);
    REQUIRE(plan.passed());
    const auto out = partition_common(m1, m2, k, plan);
    const auto bf = bf_partition_exists(*m1, *m2, k);
    CHECK(bf.found);
    CHECK(verify_common_partition(*m1, *m2, *bf.partition));
    CHECK(verify_common_partition(*m1, *m2, out.parts));
  }
}

TEST_CASE("family enumeration") {
  CHECK(bf_enumerate_family([](ElementSet) { return true; }, ElementSet::first(3)).size() == 8);

  const auto k4 = k4_instance();
  const MatroidPtr g = k4.graphic;
  const auto cycles = bf_enumerate_family(
      [&](ElementSet s) {
        if (g->independent(s)) return false;
        for (Element e : s) {
          if (!g->independent(s.without(e))) return false;
        }
        return true;
      },
      g->ground());
  CHECK(cycles.size() == 7);
  std::size_t triangles = 0;
  for (ElementSet c : cycles) triangles += c.size() == 3 ? 1 : 0;
  CHECK(triangles == 4);
  CHECK(cycles == circuits(*g));

  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t k = uniform_int(rng, 2, 3);
    const auto l = random_feasible_laminar(rng, uniform_int(rng, 1, 10), k);
    const auto m = make_laminar(l);
    const auto pair = build_laminar_pair(l, k);
    const auto by_pair =
        bf_enumerate_family([&](ElementSet x) { return family_membership(pair, x); }, l.ground());
    const auto by_split = bf_enumerate_family(
        [&](ElementSet x) { return j_member(m, k, x); }, l.ground());
    CHECK(by_pair == by_split);
  }
  CHECK_THROWS_AS(bf_enumerate_family([](ElementSet) { return true; }, ElementSet::first(17)),
                  CapacityError);
}

TEST_CASE("rank formula") {
  const auto k4 = k4_instance();
  CHECK(bf_rank_formula(*k4.graphic, 2, ElementSet{}) == 0);
  CHECK(bf_rank_formula(*k4.graphic, 2, k4.graphic->ground()) == 6);
  const UniformMatroid u(3, 1);
  CHECK(bf_rank_formula(u, 2, ElementSet::first(3)) == 2);

  Rng rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 1, 8));
    const std::size_t k = uniform_int(rng, 1, 3);
    const ElementSet x = random_subset(rng, m->ground(), 0.8);
    CHECK(bf_rank_formula(*m, k, x) == union_rank(repeated(m, k), x));
  }
}

TEST_CASE("figure-1 reconstruction") {
  const Figure1 a = reconstruct_figure1();
  const Figure1 b = reconstruct_figure1();
  CHECK(a.adjacency == b.adjacency);
  CHECK(a.graph.right_size == 3);
  CHECK(rank(*a.matroid) == 3);
  CHECK(figure1_facts_hold(*a.matroid));
  CHECK(axioms_check(independent_family(*a.matroid), a.matroid->ground()).passed());
  CHECK(a.labels.format(a.x) == "{e1,e2',e3'}");
  CHECK(a.labels.format(a.y) == "{e3,e1',e2'}");

  const MatroidPtr m = a.matroid;
  const auto j = bf_enumerate_family(
      [&](ElementSet x) { return m->independent(x) && m->independent(m->ground() - x); },
      m->ground());
  CHECK(gmatroid_axioms_check(j, m->ground()).contains({"(J1)", {a.x, a.y}, {a.e}}));

  // No mask below the returned one satisfies the facts.
  std::size_t smaller = 0;
  for (std::uint32_t mask = 0; mask < a.adjacency; ++mask) {
    BipartiteGraph g;
    g.left_size = 6;
    g.right_size = 3;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t f = 0; f < 3; ++f) {
        if ((mask >> (3 * i + f)) & 1U) g.edges.emplace_back(i, f);
      }
    }
    if (figure1_facts_hold(TransversalMatroid(g))) ++smaller;
  }
  CHECK(smaller == 0);
}

TEST_CASE("K4 instance") {
  const auto k4 = k4_instance();
  CHECK(k4.labels.format(ElementSet{0, 5}) == "{12,34}");
  CHECK(partitionable(repeated(k4.graphic, 2), k4.graphic->ground()));
  CHECK(partitionable(repeated(k4.matching_partition, 2), k4.graphic->ground()));
  CHECK_FALSE(bf_partition_exists(*k4.graphic, *k4.matching_partition, 2).found);
  CHECK(bf_max_common_independent(*k4.graphic, *k4.matching_partition).size() == 3);
}
