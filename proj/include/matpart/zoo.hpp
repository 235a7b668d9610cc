#ifndef MATPART_ZOO_HPP
#define MATPART_ZOO_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

struct CapacitySet {
  ElementSet set;
  std::size_t cap = 0;

  bool operator==(const CapacitySet&) const = default;
};

/// A laminar family with capacities over `ground`, canonicalized into a
/// forest under a virtual root (the ground set itself).
///
/// Canonical form: empty sets dropped, duplicates merged keeping the minimum
/// capacity, members sorted by decreasing size then increasing bitmask.
/// A member's parent is the smallest member strictly containing it, or -1
/// for the virtual root. Construction throws ValidationError for a crossing
/// pair or a member outside the ground set.
class LaminarDescription {
 public:
  LaminarDescription(std::size_t universe_size, ElementSet ground,
                     std::vector<CapacitySet> family);

  std::size_t universe_size() const { return universe_size_; }
  ElementSet ground() const { return ground_; }
  const std::vector<CapacitySet>& family() const { return family_; }
  int parent(std::size_t i) const { return parent_[i]; }
  /// Members whose parent is i (i = -1 for the virtual root), ordered by
  /// smallest element.
  const std::vector<std::size_t>& children(int i) const;

  bool independent(ElementSet x) const;
  /// First member whose capacity x exceeds after scaling caps by `factor`.
  std::optional<CapacitySet> first_violation(ElementSet x, std::size_t factor = 1) const;

  /// Ground elements in depth-first order of the forest: at each node, child
  /// subtrees and loose elements are visited by increasing smallest element.
  /// Every member occupies a contiguous block of this order.
  std::vector<Element> dfs_order() const;

 private:
  std::vector<Element> dfs_from(int node) const;

  std::size_t universe_size_;
  ElementSet ground_;
  std::vector<CapacitySet> family_;
  std::vector<int> parent_;
  std::vector<std::vector<std::size_t>> children_;  // index i+1; 0 is the root
};

class LaminarMatroid final : public Matroid {
 public:
  explicit LaminarMatroid(LaminarDescription description);
  const LaminarDescription& description() const { return description_; }
  std::string kind() const override { return "laminar"; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  LaminarDescription description_;
};

std::shared_ptr<const LaminarMatroid> make_laminar(LaminarDescription description);

/// Restriction to s: family {A ∩ S}, capacity of S' the minimum q(A) over
/// A with A ∩ S = S'.
LaminarDescription laminar_restriction(const LaminarDescription& l, ElementSet s);
/// Same family, capacities multiplied by k; describes the k-fold union.
LaminarDescription laminar_power(const LaminarDescription& l, std::size_t k);
/// Splits x into k sets independent in l by dealing the DFS order of x
/// round robin. Throws PreconditionError naming a member A with
/// |x ∩ A| > k·q(A).
std::vector<ElementSet> laminar_round_robin_partition(const LaminarDescription& l,
                                                     ElementSet x, std::size_t k);
/// Partition matroid as a laminar description. Blocks must be disjoint.
LaminarDescription partition_matroid(std::size_t universe_size, ElementSet ground,
                                     const std::vector<CapacitySet>& blocks);

/// G = (E, F; A) with E = {0..left_size-1} the matroid ground set.
struct BipartiteGraph {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::pair<Element, std::size_t>> edges;
};

/// Sets of left vertices saturated by some matching. Queries restart the
/// matching from scratch and are memoized by subset.
class TransversalMatroid final : public Matroid {
 public:
  explicit TransversalMatroid(BipartiteGraph graph);
  const BipartiteGraph& graph() const { return graph_; }
  std::string kind() const override { return "transversal"; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  bool has_saturating_matching(ElementSet x) const;

  BipartiteGraph graph_;
  std::vector<std::vector<std::size_t>> adjacency_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, bool> cache_;
};

/// Edge i of `edges` is ground element i. Loops are allowed.
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Acyclic edge sets (union-find forest check).
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Multigraph graph);
  const Multigraph& graph() const { return graph_; }
  std::string kind() const override { return "graphic"; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  Multigraph graph_;
};

/// U_{rank, n} over {0..n-1}; rank >= n gives the free matroid.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t rank);
  std::size_t uniform_rank() const { return rank_; }
  std::string kind() const override { return "uniform"; }

 protected:
  bool test_independent(ElementSet x) const override { return x.size() <= rank_; }

 private:
  std::size_t rank_;
};

MatroidPtr free_matroid(std::size_t n);

/// A matroid given by its full list of independent sets, or by its bases.
/// The family is checked against (I0)-(I2) at construction.
class ExplicitMatroid final : public Matroid {
 public:
  enum class Listing { independent_sets, bases };

  ExplicitMatroid(std::size_t universe_size, ElementSet ground,
                  const std::vector<ElementSet>& family, Listing listing);
  std::string kind() const override { return "explicit"; }
  /// Independent sets, increasing bitmask order.
  const std::vector<ElementSet>& family() const { return family_; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  std::vector<ElementSet> family_;
  std::unordered_map<std::uint64_t, bool> members_;
};

/// b: 2^E -> Z>=0 ∪ {+∞}, stored as a full table indexed by bitmask over
/// {0..n-1}. nullopt is +∞.
class IntersectingSubmodularSpec {
 public:
  /// Validates nonnegativity and the submodular inequality on every
  /// intersecting pair. n must be within limits().submodular_table.
  IntersectingSubmodularSpec(std::size_t n, std::vector<std::optional<std::int64_t>> table);

  std::size_t size() const { return n_; }
  const std::optional<std::int64_t>& value(ElementSet a) const { return table_[a.bits()]; }
  const std::vector<std::optional<std::int64_t>>& table() const { return table_; }
  IntersectingSubmodularSpec scaled(std::int64_t k) const;

 private:
  std::size_t n_;
  std::vector<std::optional<std::int64_t>> table_;
};

/// I_b = {X : |X ∩ A| <= b(A) for all A}.
class SubmodularBoundMatroid final : public Matroid {
 public:
  explicit SubmodularBoundMatroid(IntersectingSubmodularSpec spec);
  const IntersectingSubmodularSpec& spec() const { return spec_; }
  std::string kind() const override { return "intersecting-submodular"; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  IntersectingSubmodularSpec spec_;
  std::vector<CapacitySet> finite_bounds_;
};

bool laminar_independent(const LaminarDescription& l, ElementSet x);
bool transversal_independent(const BipartiteGraph& g, ElementSet x);
bool graphic_independent(const Multigraph& h, ElementSet x);
bool isub_independent(const IntersectingSubmodularSpec& s, ElementSet x);

}  // namespace matpart

#endif  // MATPART_ZOO_HPP
