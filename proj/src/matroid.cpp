#include "matpart/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "matpart/errors.hpp"
#include "matpart/limits.hpp"

namespace matpart {

Matroid::Matroid(std::size_t universe_size, ElementSet ground)
    : universe_size_(universe_size), ground_(ground) {
  if (!ground.subset_of(ElementSet::first(universe_size))) {
    throw ValidationError("ground set " + ground.to_string() + " lies outside a universe of " +
                          std::to_string(universe_size) + " elements");
  }
}

bool Matroid::independent(ElementSet x) const {
  if (!x.subset_of(ground_)) {
    throw OracleError("independence query " + x.to_string() + " is not a subset of the ground set " +
                      ground_.to_string());
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return test_independent(x);
}

ElementSet maximal_independent_subset(const Matroid& m, ElementSet a) {
  ElementSet current;
  for (Element e : a) {
    const ElementSet candidate = current.with(e);
    if (m.independent(candidate)) current = candidate;
  }
  return current;
}

std::size_t rank(const Matroid& m, ElementSet a) {
  return maximal_independent_subset(m, a).size();
}

bool spans(const Matroid& m, ElementSet x, Element e) {
  if (x.contains(e)) return true;
  const ElementSet base = maximal_independent_subset(m, x);
  return !m.independent(base.with(e));
}

ElementSet closure(const Matroid& m, ElementSet x) {
  const ElementSet base = maximal_independent_subset(m, x);
  ElementSet out = x;
  for (Element e : m.ground() - x) {
    if (!m.independent(base.with(e))) out.insert(e);
  }
  return out;
}

ElementSet some_base(const Matroid& m) { return maximal_independent_subset(m, m.ground()); }

namespace {

void check_spanned_capacity(const Matroid& m) {
  if (m.ground().size() > limits().spanned) {
    throw CapacityError("circuit enumeration needs |E| <= " + std::to_string(limits().spanned) +
                        ", got " + std::to_string(m.ground().size()));
  }
}

// Independent S ⊆ candidates (elements above `from`) extended in index order;
// S + e dependent with every S - x + e independent makes S + e a circuit.
void collect_circuits(const Matroid& m, Element e, ElementSet current,
                      const std::vector<Element>& order, std::size_t from,
                      std::vector<ElementSet>& out) {
  const ElementSet with_e = current.with(e);
  if (!m.independent(with_e)) {
    bool minimal = true;
    for (Element x : current) {
      if (!m.independent(with_e.without(x))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(with_e);
    return;
  }
  for (std::size_t i = from; i < order.size(); ++i) {
    const ElementSet next = current.with(order[i]);
    if (m.independent(next)) collect_circuits(m, e, next, order, i + 1, out);
  }
}

bool pack_disjoint(const std::vector<ElementSet>& candidates, std::size_t from, std::size_t needed,
                   ElementSet used, std::vector<ElementSet>& chosen) {
  if (needed == 0) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    if (!candidates[i].disjoint_from(used)) continue;
    chosen.push_back(candidates[i]);
    if (pack_disjoint(candidates, i + 1, needed - 1, used | candidates[i], chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<ElementSet> circuits_through(const Matroid& m, Element e) {
  if (!m.ground().contains(e)) {
    throw PreconditionError("element " + std::to_string(e) + " is not in the ground set");
  }
  check_spanned_capacity(m);
  {
    std::lock_guard<std::mutex> lock(m.memo_mutex_);
    auto it = m.circuit_memo_.find(e);
    if (it != m.circuit_memo_.end()) return it->second;
  }
  std::vector<ElementSet> found;
  const std::vector<Element> order = (m.ground().without(e)).to_vector();
  collect_circuits(m, e, ElementSet{}, order, 0, found);
  std::sort(found.begin(), found.end());
  std::lock_guard<std::mutex> lock(m.memo_mutex_);
  return m.circuit_memo_.emplace(e, std::move(found)).first->second;
}

std::vector<ElementSet> circuits(const Matroid& m) {
  std::vector<ElementSet> all;
  for (Element e : m.ground()) {
    for (ElementSet c : circuits_through(m, e)) {
      if (c.min() == e) all.push_back(c);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<std::vector<ElementSet>> k_spanning_sets(const Matroid& m, Element e,
                                                      std::size_t k) {
  if (k == 0) throw PreconditionError("k-spanned test needs k >= 1");
  if (!m.ground().contains(e)) {
    throw PreconditionError("element " + std::to_string(e) + " is not in the ground set");
  }
  check_spanned_capacity(m);
  std::vector<ElementSet> chosen{ElementSet::singleton(e)};
  if (k == 1) return chosen;
  std::vector<ElementSet> rests;
  for (ElementSet c : circuits_through(m, e)) rests.push_back(c.without(e));
  if (!rests.empty() && rests.front().empty()) {
    // A loop is spanned by the empty set, any number of times over.
    chosen.insert(chosen.end(), k - 1, ElementSet{});
    return chosen;
  }
  std::vector<ElementSet> packed;
  if (!pack_disjoint(rests, 0, k - 1, ElementSet{}, packed)) return std::nullopt;
  chosen.insert(chosen.end(), packed.begin(), packed.end());
  return chosen;
}

bool is_k_spanned(const Matroid& m, Element e, std::size_t k) {
  return k_spanning_sets(m, e, k).has_value();
}

std::optional<SpannedWitness> find_k_spanned(const Matroid& m, std::size_t k) {
  for (Element e : m.ground()) {
    if (auto sets = k_spanning_sets(m, e, k)) return SpannedWitness{e, std::move(*sets)};
  }
  return std::nullopt;
}

std::vector<ElementSet> independent_family(const Matroid& m) {
  if (m.ground().size() > limits().axioms) {
    throw CapacityError("explicit enumeration needs |E| <= " + std::to_string(limits().axioms));
  }
  std::vector<ElementSet> family;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (m.independent(s)) family.push_back(s);
  });
  return family;
}

AxiomReport axioms_check(std::span<const ElementSet> family, ElementSet ground) {
  if (ground.size() > limits().axioms) {
    throw CapacityError("axioms_check needs |E| <= " + std::to_string(limits().axioms));
  }
  std::unordered_set<std::uint64_t> members;
  for (ElementSet s : family) {
    if (!s.subset_of(ground)) {
      throw ValidationError("family member " + s.to_string() + " lies outside the ground set");
    }
    members.insert(s.bits());
  }
  std::vector<ElementSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  AxiomReport report;
  if (!members.contains(0)) report.add({"(I0)", {ElementSet{}}, {}});
  for (ElementSet x : sorted) {
    for (Element e : x) {
      if (!members.contains(x.without(e).bits())) report.add({"(I1)", {x}, {e}});
    }
  }
  for (ElementSet x : sorted) {
    for (ElementSet y : sorted) {
      if (x.size() >= y.size()) continue;
      bool extended = false;
      for (Element e : y - x) {
        if (members.contains(x.with(e).bits())) {
          extended = true;
          break;
        }
      }
      if (!extended) report.add({"(I2)", {x, y}, {}});
    }
  }
  return report;
}

}  // namespace matpart
