#ifndef MATPART_PARTITIONER_HPP
#define MATPART_PARTITIONER_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matpart/algorithms.hpp"
#include "matpart/element_set.hpp"
#include "matpart/errors.hpp"
#include "matpart/matroid.hpp"

namespace matpart {

enum class Mode { automatic, laminar, kz1, kz2, mixed_kz1, mixed_kz2, generic };

std::string to_string(Mode mode);
/// Throws ValidationError for an unknown name.
Mode parse_mode(const std::string& name);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  /// False when the check was skipped for size and taken on trust.
  bool verified = true;
  std::string detail;
  std::optional<Element> witness_element;
  std::vector<ElementSet> witness_sets;
};

struct PartitionPlan {
  Mode mode = Mode::generic;
  std::size_t k = 1;
  /// For the mixed modes: which input (0 or 1) is the laminar matroid.
  std::size_t laminar_side = 0;
  std::vector<HypothesisCheck> checks;

  bool passed() const;
  const HypothesisCheck* first_failure() const;
};

/// Runs the mode's hypothesis checks. Mode::automatic tries laminar, kz1,
/// kz2, mixed-kz1, mixed-kz2 in that order and falls back to generic.
PartitionPlan validate_plan(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                            Mode mode);

/// X ∈ J = {X ∈ I : E ∖ X ∈ I^{k-1}}, E = m.ground(). Requires k >= 2.
bool j_member(const MatroidPtr& m, std::size_t k, ElementSet x);

struct PadBounds {
  std::size_t m_max = 0;
  std::size_t m_min = 0;

  bool operator==(const PadBounds&) const = default;
};

/// Largest and smallest member size over J_1 ∪ J_2:
/// m_max = max_i r_i(E), m_min = min_i (|E| - r_i^{k-1}(E)).
/// Throws PreconditionError unless E ∈ I_1^k ∩ I_2^k.
PadBounds compute_pad_bounds(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k);

/// The padded matroid on E ∪ U whose bases are X ∪ V with X ∈ J, V ⊆ U,
/// |X ∪ V| = m_max. X' ∪ V is independent iff X' ∈ I and E ∖ X' splits
/// into Z ∈ truncation(contraction(M, X'), m_max - |X'| - |V|) and k-1
/// independent sets of M.
class PaddedMatroid final : public Matroid {
 public:
  PaddedMatroid(MatroidPtr base, std::size_t k, std::size_t m_max, ElementSet pads);
  std::string kind() const override { return "padded"; }
  const MatroidPtr& base() const { return base_; }
  ElementSet pads() const { return pads_; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  MatroidPtr base_;
  std::size_t k_;
  std::size_t m_max_;
  ElementSet pads_;
};

struct PaddedInstance {
  ElementSet base_ground;
  /// Fresh indices appended after the universe; |pads| = m_max - m_min.
  ElementSet pads;
  PadBounds bounds;
  std::size_t k = 0;
  std::shared_ptr<const PaddedMatroid> padded1;
  std::shared_ptr<const PaddedMatroid> padded2;
};

PaddedInstance make_padded_instance(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k);

/// extract_step could not produce a member of J_1 ∩ J_2.
class StepFailure : public MatroidError {
 public:
  StepFailure(const std::string& what, std::size_t step_k,
              std::optional<IntersectionResult> certificate)
      : MatroidError(what), step_k_(step_k), certificate_(std::move(certificate)) {}
  std::size_t step_k() const { return step_k_; }
  const std::optional<IntersectionResult>& certificate() const { return certificate_; }

 private:
  std::size_t step_k_;
  std::optional<IntersectionResult> certificate_;
};

struct StepRecord {
  std::size_t k = 0;
  ElementSet ground;
  ElementSet extracted;
  PadBounds bounds;
  std::size_t pad_count = 0;
  std::size_t augmentations = 0;
  /// Oracle calls on the two input matroids during this step.
  std::uint64_t oracle_calls = 0;
};

/// One induction step: X ∈ J_1 ∩ J_2 via a common base of the padded
/// matroids, X = B ∩ E, verified with j_member before returning.
/// Throws StepFailure when no common base exists or X fails verification.
ElementSet extract_step(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                        StepRecord* record = nullptr);

struct CommonPartition {
  /// parts[j] is the j-th extracted set; the last part is the remainder.
  std::vector<ElementSet> parts;
  std::vector<StepRecord> transcript;
  std::uint64_t oracle_calls = 0;
};

/// Partitions E into k common independent sets by k-1 extraction steps.
/// Throws PreconditionError when the plan failed; StepFailure from a step;
/// InternalError if the final partition does not verify.
CommonPartition partition_common(const MatroidPtr& m1, const MatroidPtr& m2, std::size_t k,
                                 const PartitionPlan& plan);

/// Disjoint, covering `ground`, and every part independent in both.
bool verify_common_partition(const Matroid& m1, const Matroid& m2,
                             const std::vector<ElementSet>& parts);

}  // namespace matpart

#endif  // MATPART_PARTITIONER_HPP
