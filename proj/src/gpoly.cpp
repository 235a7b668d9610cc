#include "matpart/gpoly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "matpart/algorithms.hpp"
#include "matpart/errors.hpp"
#include "matpart/limits.hpp"

namespace matpart {

std::string ExtendedInt::to_string() const {
  switch (kind_) {
    case Kind::minus_infinity:
      return "-inf";
    case Kind::plus_infinity:
      return "+inf";
    case Kind::finite:
      break;
  }
  return std::to_string(value_);
}

std::string to_string(PairProvenance p) {
  switch (p) {
    case PairProvenance::laminar_pair:
      return "laminar-pair";
    case PairProvenance::rank_pair:
      return "rank-pair";
    case PairProvenance::explicit_table:
      break;
  }
  return "explicit";
}

ParamodularPair ParamodularPair::finite_family(std::size_t universe_size, ElementSet ground,
                                               std::vector<PairEntry> entries,
                                               PairProvenance provenance) {
  if (!ground.subset_of(ElementSet::first(universe_size))) {
    throw ValidationError("pair ground set lies outside the universe");
  }
  std::sort(entries.begin(), entries.end(),
            [](const PairEntry& a, const PairEntry& b) { return a.set < b.set; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const PairEntry& e = entries[i];
    if (!e.set.subset_of(ground)) {
      throw ValidationError("pair entry " + e.set.to_string() + " lies outside the ground set");
    }
    if (i > 0 && entries[i - 1].set == e.set) {
      throw ValidationError("pair entry " + e.set.to_string() + " is listed twice");
    }
    if (e.p.is_plus_infinity() || e.b.is_minus_infinity()) {
      throw ValidationError("pair entry " + e.set.to_string() +
                            " needs p < +inf and b > -inf");
    }
  }
  ParamodularPair pair;
  pair.universe_size_ = universe_size;
  pair.ground_ = ground;
  pair.provenance_ = provenance;
  pair.entries_ = std::move(entries);
  return pair;
}

ParamodularPair ParamodularPair::rank_backed(MatroidPtr m, std::size_t k) {
  if (k < 2) throw PreconditionError("rank pairs are defined for k >= 2");
  ParamodularPair pair;
  pair.universe_size_ = m->universe_size();
  pair.ground_ = m->ground();
  pair.provenance_ = PairProvenance::rank_pair;
  pair.matroid_ = std::move(m);
  pair.k_ = k;
  return pair;
}

const PairEntry* ParamodularPair::find(ElementSet a) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                             [](const PairEntry& e, ElementSet s) { return e.set < s; });
  if (it == entries_.end() || it->set != a) return nullptr;
  return &*it;
}

ExtendedInt ParamodularPair::p(ElementSet a) const {
  if (matroid_) {
    const auto copies = repeated(matroid_, k_ - 1);
    return ExtendedInt::finite(static_cast<std::int64_t>(a.size()) -
                               static_cast<std::int64_t>(union_rank(copies, a)));
  }
  const PairEntry* e = find(a);
  return e != nullptr ? e->p : ExtendedInt::minus_infinity();
}

ExtendedInt ParamodularPair::b(ElementSet a) const {
  if (matroid_) return ExtendedInt::finite(static_cast<std::int64_t>(rank(*matroid_, a)));
  const PairEntry* e = find(a);
  return e != nullptr ? e->b : ExtendedInt::plus_infinity();
}

ParamodularPair build_laminar_pair(const LaminarDescription& l, std::size_t k) {
  if (k == 0) throw PreconditionError("laminar pair needs k >= 1");
  const MatroidPtr m = make_laminar(l);
  const auto copies = repeated(m, k);
  const PartitionResult split = matroid_partition(copies, l.ground());
  if (!split.covered) {
    throw PreconditionError("ground set is not partitionable into " + std::to_string(k) +
                            " independent sets; deficiency set " +
                            split.deficiency_witness->to_string());
  }
  std::vector<PairEntry> entries;
  for (const CapacitySet& member : l.family()) {
    const auto q = static_cast<std::int64_t>(member.cap);
    entries.push_back({member.set,
                       ExtendedInt::finite(static_cast<std::int64_t>(member.set.size()) -
                                           static_cast<std::int64_t>(k - 1) * q),
                       ExtendedInt::finite(q)});
  }
  // With k = 1 the complement must be empty, so E itself gets the lower
  // bound |E|. E never properly intersects another set, so the
  // intersecting checks are unaffected.
  const bool has_ground =
      std::any_of(entries.begin(), entries.end(), [&](const PairEntry& e) { return e.set == l.ground(); });
  if (k == 1 && !has_ground) {
    entries.push_back({l.ground(), ExtendedInt::finite(static_cast<std::int64_t>(l.ground().size())),
                       ExtendedInt::plus_infinity()});
  }
  return ParamodularPair::finite_family(l.universe_size(), l.ground(), std::move(entries),
                                        PairProvenance::laminar_pair);
}

ParamodularPair build_rank_pair(MatroidPtr m, std::size_t k, HypothesisPolicy policy) {
  if (k < 2) throw PreconditionError("rank pairs are defined for k >= 2");
  if (policy == HypothesisPolicy::verify) {
    if (auto w = find_k_spanned(*m, k + 1)) {
      throw PreconditionError("element " + std::to_string(w->element) + " is " +
                              std::to_string(k + 1) + "-spanned");
    }
  }
  return ParamodularPair::rank_backed(std::move(m), k);
}

namespace {

bool within(ExtendedInt lower, std::int64_t value, ExtendedInt upper) {
  if (lower.is_finite() && value < lower.value()) return false;
  if (upper.is_finite() && value > upper.value()) return false;
  // p is never +inf and b is never -inf for well-formed pairs.
  return !lower.is_plus_infinity() && !upper.is_minus_infinity();
}

bool within(ExtendedInt lower, const Rational& value, ExtendedInt upper) {
  if (lower.is_finite() && value < Rational(lower.value())) return false;
  if (upper.is_finite() && value > Rational(upper.value())) return false;
  return !lower.is_plus_infinity() && !upper.is_minus_infinity();
}

void check_polytope_capacity(const ParamodularPair& pair) {
  if (pair.ground().size() > limits().polytope) {
    throw CapacityError("oracle-backed constraint scans need |E| <= " +
                        std::to_string(limits().polytope));
  }
}

}  // namespace

bool family_membership(const ParamodularPair& pair, ElementSet x) {
  if (!x.subset_of(pair.ground())) return false;
  if (pair.oracle_backed()) {
    const MatroidPtr& m = pair.matroid();
    return m->independent(x) && partitionable(repeated(m, pair.k() - 1), pair.ground() - x);
  }
  return std::all_of(pair.entries().begin(), pair.entries().end(), [&](const PairEntry& e) {
    return within(e.p, static_cast<std::int64_t>((x & e.set).size()), e.b);
  });
}

bool family_membership_by_constraints(const ParamodularPair& pair, ElementSet x) {
  if (!pair.oracle_backed()) return family_membership(pair, x);
  if (!x.subset_of(pair.ground())) return false;
  check_polytope_capacity(pair);
  return all_subsets(pair.ground(), [&](ElementSet a) {
    return within(pair.p(a), static_cast<std::int64_t>((x & a).size()), pair.b(a));
  });
}

RationalVector::RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const Rational& r : entries_) {
    if (r < Rational(0) || r > Rational(1)) {
      throw ValidationError("vector entries must lie in [0, 1]");
    }
  }
}

RationalVector RationalVector::uniform(std::size_t universe_size, ElementSet support,
                                       std::int64_t k) {
  if (k <= 0) throw PreconditionError("uniform vector needs k >= 1");
  std::vector<Rational> v(universe_size, Rational(0));
  for (Element e : support) v.at(e) = Rational(1, k);
  return RationalVector(std::move(v));
}

RationalVector RationalVector::characteristic(std::size_t universe_size, ElementSet x) {
  std::vector<Rational> v(universe_size, Rational(0));
  for (Element e : x) v.at(e) = Rational(1);
  return RationalVector(std::move(v));
}

Rational RationalVector::sum_over(ElementSet a) const {
  Rational total(0);
  for (Element e : a) total += entries_.at(e);
  return total;
}

bool polytope_membership(const ParamodularPair& pair, const RationalVector& x) {
  if (x.size() != pair.universe_size()) {
    throw ValidationError("vector length does not match the universe");
  }
  if (!pair.oracle_backed()) {
    return std::all_of(pair.entries().begin(), pair.entries().end(), [&](const PairEntry& e) {
      return within(e.p, x.sum_over(e.set), e.b);
    });
  }
  check_polytope_capacity(pair);
  return all_subsets(pair.ground(), [&](ElementSet a) {
    return within(pair.p(a), x.sum_over(a), pair.b(a));
  });
}

namespace {

// p and b over all subsets of the ground set, indexed by local bitmask.
struct PairTable {
  std::vector<ElementSet> sets;
  std::vector<ExtendedInt> p;
  std::vector<ExtendedInt> b;
};

PairTable tabulate(const ParamodularPair& pair) {
  const std::size_t n = pair.ground().size();
  if (n > limits().pair_check) {
    throw CapacityError("exhaustive pair checks need |E| <= " + std::to_string(limits().pair_check));
  }
  const std::vector<Element> elems = pair.ground().to_vector();
  const std::size_t full = std::size_t{1} << n;
  PairTable t;
  t.sets.resize(full);
  for (std::size_t local = 1; local < full; ++local) {
    t.sets[local] = t.sets[local & (local - 1)].with(elems[std::countr_zero(local)]);
  }
  t.p.reserve(full);
  t.b.reserve(full);
  for (std::size_t local = 0; local < full; ++local) {
    t.p.push_back(pair.p(t.sets[local]));
    t.b.push_back(pair.b(t.sets[local]));
  }
  return t;
}

bool intersecting(std::size_t a, std::size_t b) {
  return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
}

void cross_violations(const PairTable& t, ParamodularMode mode, AxiomReport& report) {
  const std::size_t full = t.sets.size();
  for (std::size_t a = 0; a < full; ++a) {
    if (t.b[a].is_plus_infinity()) continue;
    for (std::size_t b = 0; b < full; ++b) {
      if (mode == ParamodularMode::intersecting && !intersecting(a, b)) continue;
      if (t.p[b].is_minus_infinity()) continue;
      const ExtendedInt rb = t.b[a & ~b];
      const ExtendedInt rp = t.p[b & ~a];
      const bool holds = rb.is_finite() && rp.is_finite() &&
                         t.b[a].value() - t.p[b].value() >= rb.value() - rp.value();
      if (!holds) report.add({"cross", {t.sets[a], t.sets[b]}, {}});
    }
  }
}

}  // namespace

AxiomReport check_paramodular(const ParamodularPair& pair, ParamodularMode mode) {
  const PairTable t = tabulate(pair);
  AxiomReport report;
  const ExtendedInt p0 = t.p[0];
  const ExtendedInt b0 = t.b[0];
  const bool zero_p = p0 == ExtendedInt::finite(0);
  const bool zero_b = b0 == ExtendedInt::finite(0);
  if (mode == ParamodularMode::full) {
    if (!zero_p || !zero_b) report.add({"(i)", {ElementSet{}}, {}});
  } else if ((p0.is_finite() && !zero_p) || (b0.is_finite() && !zero_b)) {
    report.add({"(i)", {ElementSet{}}, {}});
  }

  const std::size_t full = t.sets.size();
  for (std::size_t a = 0; a < full; ++a) {
    for (std::size_t b = a + 1; b < full; ++b) {
      if (mode == ParamodularMode::intersecting && !intersecting(a, b)) continue;
      const std::size_t join = a | b;
      const std::size_t meet = a & b;
      if (t.b[a].is_finite() && t.b[b].is_finite()) {
        const bool holds = t.b[join].is_finite() && t.b[meet].is_finite() &&
                           t.b[a].value() + t.b[b].value() >= t.b[join].value() + t.b[meet].value();
        if (!holds) report.add({"submodular", {t.sets[a], t.sets[b]}, {}});
      }
      if (t.p[a].is_finite() && t.p[b].is_finite()) {
        const bool holds = t.p[join].is_finite() && t.p[meet].is_finite() &&
                           t.p[a].value() + t.p[b].value() <= t.p[join].value() + t.p[meet].value();
        if (!holds) report.add({"supermodular", {t.sets[a], t.sets[b]}, {}});
      }
    }
  }
  cross_violations(t, mode, report);
  return report;
}

AxiomReport check_cross(const ParamodularPair& pair, ParamodularMode mode) {
  AxiomReport report;
  cross_violations(tabulate(pair), mode, report);
  return report;
}

AxiomReport check_local_cross(const ParamodularPair& pair) {
  const PairTable t = tabulate(pair);
  const std::size_t full = t.sets.size();
  for (std::size_t a = 0; a < full; ++a) {
    if (!t.p[a].is_finite() || !t.b[a].is_finite()) {
      throw PreconditionError("local cross check needs finite p and b; " + t.sets[a].to_string() +
                              " has an infinite value");
    }
  }
  AxiomReport report;
  const std::size_t all = full - 1;
  for (std::size_t bit = 1; bit < full; bit <<= 1) {
    const std::size_t rest = all & ~bit;
    std::size_t a = 0;
    while (true) {
      const std::size_t free_for_b = rest & ~a;
      std::size_t b = 0;
      while (true) {
        const std::int64_t gain_b = t.b[a | bit].value() - t.b[a].value();
        const std::int64_t gain_p = t.p[b | bit].value() - t.p[b].value();
        if (gain_b < gain_p) {
          report.add({"local-cross", {t.sets[a], t.sets[b]}, {*t.sets[bit].min()}});
        }
        if (b == free_for_b) break;
        b = (b - free_for_b) & free_for_b;
      }
      if (a == rest) break;
      a = (a - rest) & rest;
    }
  }
  return report;
}

AxiomReport gmatroid_axioms_check(std::span<const ElementSet> family, ElementSet ground) {
  if (ground.size() > limits().polytope) {
    throw CapacityError("generalized-matroid checks need |E| <= " + std::to_string(limits().polytope));
  }
  AxiomReport report;
  if (family.empty()) {
    report.notes.push_back("empty family: both axioms hold vacuously");
    return report;
  }
  std::vector<ElementSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_set<std::uint64_t> members;
  for (ElementSet s : sorted) {
    if (!s.subset_of(ground)) {
      throw ValidationError("family member " + s.to_string() + " lies outside the ground set");
    }
    members.insert(s.bits());
  }
  auto has = [&](ElementSet s) { return members.contains(s.bits()); };
  for (ElementSet x : sorted) {
    for (ElementSet y : sorted) {
      const ElementSet only_x = x - y;
      for (Element e : y - x) {
        bool j1 = has(x.with(e));
        for (Element f : only_x) {
          if (j1) break;
          j1 = has(x.with(e).without(f));
        }
        if (!j1) report.add({"(J1)", {x, y}, {e}});
        bool j2 = has(y.without(e));
        for (Element f : only_x) {
          if (j2) break;
          j2 = has(y.without(e).with(f));
        }
        if (!j2) report.add({"(J2)", {x, y}, {e}});
      }
    }
  }
  return report;
}

}  // namespace matpart
