#ifndef MATPART_ALGORITHMS_HPP
#define MATPART_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

struct PartitionResult {
  /// parts[j] is independent in matroid j; parts are pairwise disjoint.
  std::vector<ElementSet> parts;
  bool covered = false;
  /// When not covered: Y ⊆ X with |X ∖ Y| + Σ r_j(Y) = |∪ parts| < |X|.
  std::optional<ElementSet> deficiency_witness;
  std::uint64_t oracle_calls = 0;

  ElementSet covered_set() const;
};

/// Edmonds matroid partition: tries to split x into one independent set per
/// listed matroid, augmenting along shortest exchange paths (deterministic:
/// breadth-first, parts and elements in increasing index order).
///
/// All matroids must share a universe and contain x in their ground sets;
/// otherwise ValidationError.
PartitionResult matroid_partition(std::span<const MatroidPtr> matroids, ElementSet x);

/// Whether x splits into one independent set per matroid; stops at the first
/// element that cannot be inserted.
bool partitionable(std::span<const MatroidPtr> matroids, ElementSet x);

/// Largest size of a subset of x partitionable across the list.
std::size_t union_rank(std::span<const MatroidPtr> matroids, ElementSet x);

/// [m, m, ..., m] (k copies).
std::vector<MatroidPtr> repeated(const MatroidPtr& m, std::size_t k);

/// Checks the witness arithmetic |X ∖ Y| + Σ r_j(Y) < |X|.
bool certifies_deficiency(std::span<const MatroidPtr> matroids, ElementSet x, ElementSet y);

struct IntersectionCertificate {
  /// first ∪ second = ground, r1(first) + r2(second) = |common_set|.
  ElementSet first;
  ElementSet second;
};

struct IntersectionResult {
  ElementSet common_set;
  /// True when the certificate checks out (always, for genuine matroids).
  bool is_max = false;
  std::optional<IntersectionCertificate> certificate;
  std::size_t augmentations = 0;
  std::uint64_t oracle_calls = 0;
};

/// Maximum common independent set by shortest augmenting paths in the
/// exchange graph, ties broken by element index (so lower indices are
/// preferred). Both matroids must have the same ground set.
IntersectionResult matroid_intersection_max(const Matroid& m1, const Matroid& m2);

struct CommonBaseResult {
  std::optional<ElementSet> base;
  std::size_t rank1 = 0;
  std::size_t rank2 = 0;
  /// Empty when the ranks differ (no intersection was run).
  std::optional<IntersectionResult> intersection;
};

/// A common base, or nullopt with the rank report / maximality certificate.
CommonBaseResult common_base(const Matroid& m1, const Matroid& m2);

}  // namespace matpart

#endif  // MATPART_ALGORITHMS_HPP
