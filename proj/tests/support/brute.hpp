#ifndef MATPART_TESTS_BRUTE_HPP
#define MATPART_TESTS_BRUTE_HPP

// Independent exhaustive references used only by tests.

#include <algorithm>
#include <vector>

#include "matpart/matroid.hpp"

namespace matpart::testing {

/// Largest independent subset of a by scanning every subset.
inline std::size_t brute_rank(const Matroid& m, ElementSet a) {
  std::size_t best = 0;
  for_each_subset(a, [&](ElementSet s) {
    if (s.size() > best && m.independent(s)) best = s.size();
  });
  return best;
}

/// Minimal dependent subsets of the ground set.
inline std::vector<ElementSet> brute_circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (m.independent(s)) return;
    for (Element e : s) {
      if (!m.independent(s.without(e))) return;
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// x splits into k independent sets of m, by backtracking.
inline bool brute_k_colorable(const Matroid& m, std::size_t k, ElementSet x) {
  std::vector<Element> elems = x.to_vector();
  std::vector<ElementSet> parts(k);
  auto go = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == elems.size()) return true;
    for (std::size_t p = 0; p < std::min(used + 1, k); ++p) {
      const ElementSet grown = parts[p].with(elems[i]);
      if (!m.independent(grown)) continue;
      parts[p] = grown;
      if (self(self, i + 1, std::max(used, p + 1))) return true;
      parts[p] = grown.without(elems[i]);
    }
    return false;
  };
  if (k == 0) return x.empty();
  return go(go, 0, 0);
}

/// Every X ⊆ ground with pred(X), increasing bitmask order.
template <class Pred>
std::vector<ElementSet> brute_family(ElementSet ground, Pred&& pred) {
  std::vector<ElementSet> out;
  for_each_subset(ground, [&](ElementSet s) {
    if (pred(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matpart::testing

#endif  // MATPART_TESTS_BRUTE_HPP
