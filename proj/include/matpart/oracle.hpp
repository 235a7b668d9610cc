#ifndef MATPART_ORACLE_HPP
#define MATPART_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/matroid.hpp"
#include "matpart/zoo.hpp"

namespace matpart {

// Exhaustive ground truth for the algorithmic modules. Everything here is
// exponential and guarded by limits().

struct ExhaustiveResult {
  bool found = false;
  std::optional<std::vector<ElementSet>> partition;
  std::uint64_t nodes_explored = 0;
};

/// Backtracking over assignments of ground elements (in index order) to k
/// parts, a new part index only opened in order of first use. The first
/// partition found is lexicographically first in that order.
ExhaustiveResult bf_partition_exists(const Matroid& m1, const Matroid& m2, std::size_t k);

/// Subsets of `ground` satisfying pred, in increasing bitmask order.
std::vector<ElementSet> bf_enumerate_family(const std::function<bool(ElementSet)>& pred,
                                            ElementSet ground);

/// min over Y ⊆ X of |X ∖ Y| + k·r(Y).
std::size_t bf_rank_formula(const Matroid& m, std::size_t k, ElementSet x);
/// min over Y ⊆ X of |X ∖ Y| + Σ_j r_j(Y).
std::size_t bf_rank_formula(std::span<const MatroidPtr> matroids, ElementSet x);

/// Largest common independent set by exhaustive scan.
ElementSet bf_max_common_independent(const Matroid& m1, const Matroid& m2);

/// Element indices of the six-element example: e1, e2, e3, e1', e2', e3'.
namespace fig1 {
inline constexpr Element e1 = 0, e2 = 1, e3 = 2, e1p = 3, e2p = 4, e3p = 5;
}

struct Figure1 {
  BipartiteGraph graph;
  std::shared_ptr<const TransversalMatroid> matroid;
  GroundSet labels;
  /// Adjacency bitmask: bit 3·i + f is the edge (element i, right vertex f).
  std::uint32_t adjacency = 0;
  std::uint64_t candidates_scanned = 0;
  /// The exchange-axiom witnesses X = {e1,e2',e3'}, Y = {e1',e2',e3}, e3.
  ElementSet x;
  ElementSet y;
  Element e;
};

/// True iff the transversal matroid of g satisfies every stated fact of the
/// six-element example.
bool figure1_facts_hold(const Matroid& m);

/// Lexicographically first bipartite graph with |F| = 3 (then 4 if none)
/// whose transversal matroid satisfies figure1_facts_hold. Throws
/// InternalError when the search is exhausted.
Figure1 reconstruct_figure1();

struct K4Instance {
  GroundSet labels;  // edges 12, 13, 14, 23, 24, 34
  MatroidPtr graphic;
  MatroidPtr matching_partition;  // blocks {12,34}, {13,24}, {14,23}, cap 1
};

K4Instance k4_instance();

}  // namespace matpart

#endif  // MATPART_ORACLE_HPP
