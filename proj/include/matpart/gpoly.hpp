#ifndef MATPART_GPOLY_HPP
#define MATPART_GPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "matpart/element_set.hpp"
#include "matpart/matroid.hpp"
#include "matpart/report.hpp"
#include "matpart/zoo.hpp"

namespace matpart {

/// An integer or ±∞.
class ExtendedInt {
 public:
  enum class Kind { minus_infinity, finite, plus_infinity };

  constexpr ExtendedInt() = default;
  static constexpr ExtendedInt finite(std::int64_t v) { return ExtendedInt(Kind::finite, v); }
  static constexpr ExtendedInt plus_infinity() { return ExtendedInt(Kind::plus_infinity, 0); }
  static constexpr ExtendedInt minus_infinity() { return ExtendedInt(Kind::minus_infinity, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
  constexpr bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  constexpr bool operator==(const ExtendedInt&) const = default;
  std::string to_string() const;

 private:
  constexpr ExtendedInt(Kind kind, std::int64_t v) : kind_(kind), value_(v) {}
  Kind kind_ = Kind::finite;
  std::int64_t value_ = 0;
};

enum class PairProvenance { laminar_pair, rank_pair, explicit_table };
std::string to_string(PairProvenance p);

struct PairEntry {
  ElementSet set;
  ExtendedInt p;
  ExtendedInt b;
};

/// A lower/upper pair (p, b) of set functions on the ground set.
///
/// FiniteFamily pairs list (A, p(A), b(A)) and default to p = -∞, b = +∞
/// elsewhere. Rank-backed pairs evaluate b = r and p(A) = |A| - r^{k-1}(A)
/// through the oracle and are never tabulated.
class ParamodularPair {
 public:
  static ParamodularPair finite_family(std::size_t universe_size, ElementSet ground,
                                       std::vector<PairEntry> entries,
                                       PairProvenance provenance = PairProvenance::explicit_table);
  static ParamodularPair rank_backed(MatroidPtr m, std::size_t k);

  std::size_t universe_size() const { return universe_size_; }
  ElementSet ground() const { return ground_; }
  PairProvenance provenance() const { return provenance_; }
  bool oracle_backed() const { return matroid_ != nullptr; }
  /// Finite-family entries in increasing bitmask order (empty for rank pairs).
  const std::vector<PairEntry>& entries() const { return entries_; }
  const MatroidPtr& matroid() const { return matroid_; }
  std::size_t k() const { return k_; }

  ExtendedInt p(ElementSet a) const;
  ExtendedInt b(ElementSet a) const;

 private:
  ParamodularPair() = default;
  const PairEntry* find(ElementSet a) const;

  std::size_t universe_size_ = 0;
  ElementSet ground_;
  PairProvenance provenance_ = PairProvenance::explicit_table;
  std::vector<PairEntry> entries_;
  MatroidPtr matroid_;
  std::size_t k_ = 0;
};

/// p(A) = |A| - (k-1)·q(A), b(A) = q(A) on the family. Throws
/// PreconditionError (with the deficiency set in the message) unless the
/// ground set is partitionable into k independent sets.
ParamodularPair build_laminar_pair(const LaminarDescription& l, std::size_t k);

enum class HypothesisPolicy { verify, assume };

/// b = r, p(A) = |A| - r^{k-1}(A). Requires k >= 2. With
/// HypothesisPolicy::verify, raises PreconditionError naming a
/// (k+1)-spanned element when one exists.
ParamodularPair build_rank_pair(MatroidPtr m, std::size_t k,
                                HypothesisPolicy policy = HypothesisPolicy::verify);

/// X ∈ F(p, b). Finite families check listed sets; rank pairs test
/// X ∈ I and E ∖ X ∈ I^{k-1} directly.
bool family_membership(const ParamodularPair& pair, ElementSet x);
/// X ∈ F(p, b) by evaluating every constraint p(A) <= |X ∩ A| <= b(A),
/// A ⊆ E. Rank-backed pairs need |E| <= limits().polytope.
bool family_membership_by_constraints(const ParamodularPair& pair, ElementSet x);

using Rational = boost::rational<std::int64_t>;

/// One exact rational in [0, 1] per universe index.
class RationalVector {
 public:
  explicit RationalVector(std::vector<Rational> entries);
  static RationalVector uniform(std::size_t universe_size, ElementSet support, std::int64_t k);
  static RationalVector characteristic(std::size_t universe_size, ElementSet x);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](Element e) const { return entries_[e]; }
  /// x(A).
  Rational sum_over(ElementSet a) const;

 private:
  std::vector<Rational> entries_;
};

/// x ∈ Q(p, b), checked exactly on every finite constraint.
bool polytope_membership(const ParamodularPair& pair, const RationalVector& x);

enum class ParamodularMode { intersecting, full };

/// Condition (i), super/submodularity, and the cross inequality, over all
/// pairs (full) or intersecting pairs only. An inequality whose left-hand
/// side is infinite holds. In intersecting mode (i) is only required where
/// p(∅), b(∅) are finite. Axiom ids: "(i)", "supermodular", "submodular",
/// "cross"; witnesses are (A, B).
AxiomReport check_paramodular(const ParamodularPair& pair, ParamodularMode mode);
/// Only the "cross" part of check_paramodular.
AxiomReport check_cross(const ParamodularPair& pair, ParamodularMode mode);

/// b(Ã+e) - b(Ã) >= p(B̃+e) - p(B̃) for all disjoint Ã, B̃ and e outside
/// both. Requires p and b finite on every subset (PreconditionError).
/// Witnesses: sets (Ã, B̃), element e; id "local-cross".
AxiomReport check_local_cross(const ParamodularPair& pair);

/// (J1) and (J2) over an explicit family on `ground`. Witnesses: sets (X, Y),
/// element e. An empty family passes with a note.
AxiomReport gmatroid_axioms_check(std::span<const ElementSet> family, ElementSet ground);

}  // namespace matpart

#endif  // MATPART_GPOLY_HPP
