#include "doctest.h"

#include "matpart/errors.hpp"
#include "matpart/limits.hpp"
#include "matpart/matroid.hpp"
#include "matpart/oracle.hpp"
#include "matpart/zoo.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace matpart;
using namespace matpart::testing;

namespace {

// K4 edge indices.
constexpr Element k12 = 0, k13 = 1, k14 = 2, k23 = 3, k24 = 4, k34 = 5;

MatroidPtr k4() { return k4_instance().graphic; }

}  // namespace

TEST_CASE("element sets") {
  const ElementSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{0,3,5}");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(*s.min() == 0);
  CHECK(*s.max() == 5);
  CHECK((s - ElementSet{3}) == ElementSet{0, 5});
  CHECK(ElementSet{0, 1}.intersects_properly(ElementSet{1, 2}));
  CHECK_FALSE(ElementSet{0, 1}.intersects_properly(ElementSet{0, 1, 2}));
  CHECK(ElementSet::first(64).size() == 64);
  CHECK_THROWS_AS(ElementSet::first(65), CapacityError);
  CHECK_THROWS_AS(ElementSet::singleton(64), CapacityError);

  std::size_t count = 0;
  ElementSet prev;
  bool ascending = true;
  for_each_subset(s, [&](ElementSet sub) {
    if (count > 0 && !(prev < sub)) ascending = false;
    prev = sub;
    ++count;
  });
  CHECK(count == 8);
  CHECK(ascending);
}

TEST_CASE("ground set labels") {
  GroundSet g(std::vector<std::string>{"a", "b", "c"});
  CHECK(g.format(ElementSet{0, 2}) == "{a,c}");
  CHECK(*g.find("b") == 1);
  CHECK_FALSE(g.find("z"));
  CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"a", "a"}), ValidationError);
}

TEST_CASE("rank") {
  const MatroidPtr m = k4();
  CHECK(rank(*m, ElementSet{}) == 0);
  CHECK(rank(*m) == 3);
  CHECK(rank(*reconstruct_figure1().matroid) == 3);
  CHECK_THROWS_AS(m->independent(ElementSet{7}), OracleError);
}

TEST_CASE("rank agrees with exhaustive search and is submodular") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 1, 8));
    const ElementSet all = m->ground();
    std::vector<std::size_t> r(std::size_t{1} << all.size());
    for_each_subset(all, [&](ElementSet a) {
      r[a.bits()] = rank(*m, a);
      CHECK(r[a.bits()] == brute_rank(*m, a));
    });
    for_each_subset(all, [&](ElementSet a) {
      for_each_subset(all, [&](ElementSet b) {
        CHECK(r[a.bits()] + r[b.bits()] >= r[(a | b).bits()] + r[(a & b).bits()]);
        if (a.subset_of(b)) CHECK(r[a.bits()] <= r[b.bits()]);
      });
    });
  }
}

TEST_CASE("downward closure on sampled independent sets") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 1, 12));
    const ElementSet base = some_base(*m);
    CHECK(m->independent(base));
    for (int i = 0; i < 10; ++i) CHECK(m->independent(random_subset(rng, base)));
  }
}

TEST_CASE("spans") {
  const MatroidPtr m = k4();
  CHECK(spans(*m, ElementSet{k12, k23}, k13));
  CHECK_FALSE(spans(*m, ElementSet{k12, k34}, k13));
  CHECK(spans(*m, ElementSet{k12}, k12));

  const auto fig = reconstruct_figure1();
  const ElementSet x{fig1::e1, fig1::e2p};
  CHECK(spans(*fig.matroid, x, fig1::e3) ==
        (brute_rank(*fig.matroid, x.with(fig1::e3)) == brute_rank(*fig.matroid, x)));
}

TEST_CASE("circuits match the minimal dependent sets") {
  CHECK(circuits(*k4()).size() == 7);
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 1, 8));
    CHECK(circuits(*m) == brute_circuits(*m));
  }
}

TEST_CASE("k-spanned elements") {
  const MatroidPtr m = k4();
  CHECK(is_k_spanned(*m, k12, 1));
  CHECK(is_k_spanned(*m, k12, 3));
  const auto sets = k_spanning_sets(*m, k12, 3);
  REQUIRE(sets);
  CHECK(sets->front() == ElementSet{k12});
  for (std::size_t i = 0; i < sets->size(); ++i) {
    CHECK(spans(*m, (*sets)[i], k12));
    for (std::size_t j = i + 1; j < sets->size(); ++j) {
      CHECK((*sets)[i].disjoint_from((*sets)[j]));
    }
  }
  CHECK_FALSE(is_k_spanned(*m, k12, 4));
  CHECK_FALSE(is_k_spanned(*free_matroid(5), 2, 2));

  // A loop spans itself with the empty set, as often as asked.
  Multigraph g;
  g.vertex_count = 1;
  g.edges = {{0, 0}};
  CHECK(is_k_spanned(GraphicMatroid(g), 0, 5));
}

TEST_CASE("k-spanned is monotone decreasing in k") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 1, 8));
    for (Element e : m->ground()) {
      bool prev = true;
      for (std::size_t k = 1; k <= 5; ++k) {
        const bool now = is_k_spanned(*m, e, k);
        CHECK((prev || !now));
        prev = now;
      }
    }
  }
}

TEST_CASE("k-spanned respects the size threshold") {
  Limits saved = limits();
  Limits tight = saved;
  tight.spanned = 4;
  set_limits(tight);
  CHECK_THROWS_AS(is_k_spanned(*k4(), k12, 2), CapacityError);
  set_limits(saved);
}

TEST_CASE("restriction") {
  const MatroidPtr m = k4();
  const MatroidPtr whole = restriction(m, m->ground());
  for_each_subset(m->ground(), [&](ElementSet s) {
    CHECK(whole->independent(s) == m->independent(s));
  });
  const MatroidPtr star = restriction(m, ElementSet{k12, k13, k14});
  CHECK(star->independent(star->ground()));

  const auto fig = reconstruct_figure1();
  const ElementSet rest = fig.matroid->ground() - fig.x;
  const MatroidPtr r = restriction(fig.matroid, rest);
  for_each_subset(rest, [&](ElementSet s) {
    CHECK(r->independent(s) == transversal_independent(fig.graph, s));
  });
}

TEST_CASE("contraction and truncation") {
  const MatroidPtr m = k4();
  const MatroidPtr c0 = contraction(m, ElementSet{});
  for_each_subset(m->ground(), [&](ElementSet s) {
    CHECK(c0->independent(s) == m->independent(s));
  });
  const MatroidPtr c = contraction(m, ElementSet{k12});
  CHECK(rank(*c) == 2);
  CHECK(c->ground() == m->ground().without(k12));
  CHECK_THROWS_AS(contraction(m, ElementSet{k12, k13, k23}), PreconditionError);

  const MatroidPtr t0 = truncation(m, 0);
  CHECK(t0->independent(ElementSet{}));
  CHECK_FALSE(t0->independent(ElementSet{k12}));
  CHECK(rank(*truncation(m, 2)) == 2);
}

TEST_CASE("transformed views are matroids") {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const MatroidPtr m = random_matroid(rng, uniform_int(rng, 2, 8));
    const ElementSet s = random_subset(rng, m->ground(), 0.7);
    const ElementSet t = maximal_independent_subset(*m, random_subset(rng, m->ground(), 0.3));
    for (const MatroidPtr& v :
         {restriction(m, s), contraction(m, t), truncation(m, uniform_int(rng, 0, 3))}) {
      const auto family = independent_family(*v);
      CHECK(axioms_check(family, v->ground()).passed());
    }
  }
}

TEST_CASE("union power") {
  const MatroidPtr m = k4();
  CHECK(union_power(m, 1) == m);
  const MatroidPtr m2 = union_power(m, 2);
  CHECK(m2->independent(m->ground()));
  CHECK(m->independent(ElementSet{k12, k23, k34}));
  CHECK(m->independent(ElementSet{k13, k14, k24}));

  Rng rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const MatroidPtr base = random_matroid(rng, uniform_int(rng, 1, 8));
    const std::size_t k = uniform_int(rng, 1, 3);
    const MatroidPtr p = union_power(base, k);
    for_each_subset(base->ground(), [&](ElementSet s) {
      CHECK(p->independent(s) == brute_k_colorable(*base, k, s));
    });
  }
}

TEST_CASE("axioms check") {
  CHECK(axioms_check(std::vector<ElementSet>{ElementSet{}}, ElementSet{}).passed());
  CHECK(axioms_check(independent_family(*k4()), k4()->ground()).passed());

  const std::vector<ElementSet> missing{ElementSet{}, ElementSet{0, 1}};
  const AxiomReport r = axioms_check(missing, ElementSet{0, 1});
  CHECK(r.count("(I1)") > 0);
  CHECK(r.contains({"(I1)", {ElementSet{0, 1}}, {1}}));

  const std::vector<ElementSet> no_empty{ElementSet{0}};
  CHECK(axioms_check(no_empty, ElementSet{0}).count("(I0)") == 1);

  // {0,1} and {2} fail the exchange property.
  const std::vector<ElementSet> bad_exchange{ElementSet{}, ElementSet{0}, ElementSet{1},
                                             ElementSet{2}, ElementSet{0, 1}};
  const AxiomReport ex = axioms_check(bad_exchange, ElementSet{0, 1, 2});
  CHECK(ex.count("(I2)") > 0);
}

TEST_CASE("counting matroid shares one counter") {
  auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
  const auto a = std::make_shared<CountingMatroid>(k4(), counter);
  const auto b = std::make_shared<CountingMatroid>(k4(), counter);
  a->independent(ElementSet{0});
  b->independent(ElementSet{1});
  b->independent(ElementSet{2});
  CHECK(counter->load() == 3);
}
