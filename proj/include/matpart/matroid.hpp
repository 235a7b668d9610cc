#ifndef MATPART_MATROID_HPP
#define MATPART_MATROID_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matpart/element_set.hpp"
#include "matpart/report.hpp"

namespace matpart {

/// A matroid given by an independence oracle over `ground()`, a subset of the
/// index universe {0, ..., universe_size()-1}.
///
/// Views are immutable after construction. `independent` is pure and may be
/// called concurrently; the call counter and circuit memo are synchronized.
class Matroid {
 public:
  Matroid(std::size_t universe_size, ElementSet ground);
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;
  virtual ~Matroid() = default;

  std::size_t universe_size() const { return universe_size_; }
  ElementSet ground() const { return ground_; }

  /// Throws OracleError when x is not a subset of ground().
  bool independent(ElementSet x) const;

  /// Calls made to independent() on this object.
  std::uint64_t oracle_calls() const { return calls_.load(std::memory_order_relaxed); }

  virtual std::string kind() const = 0;

 protected:
  virtual bool test_independent(ElementSet x) const = 0;

 private:
  friend std::vector<ElementSet> circuits_through(const Matroid& m, Element e);

  std::size_t universe_size_;
  ElementSet ground_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::mutex memo_mutex_;
  mutable std::map<Element, std::vector<ElementSet>> circuit_memo_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Derived operations. Greedy rank is the primitive; everything else calls it.

/// Greedy maximal independent subset of a, scanning elements in index order.
ElementSet maximal_independent_subset(const Matroid& m, ElementSet a);
std::size_t rank(const Matroid& m, ElementSet a);
inline std::size_t rank(const Matroid& m) { return rank(m, m.ground()); }
bool spans(const Matroid& m, ElementSet x, Element e);
/// Every element of the ground set spanned by x.
ElementSet closure(const Matroid& m, ElementSet x);
/// A base: the greedy maximal independent subset of the ground set.
ElementSet some_base(const Matroid& m);

/// Circuits containing e, each as a full circuit (e included), in increasing
/// bitmask order. Memoized per matroid. Ground must be within limits().spanned.
std::vector<ElementSet> circuits_through(const Matroid& m, Element e);
/// All circuits of m in increasing bitmask order.
std::vector<ElementSet> circuits(const Matroid& m);

/// k pairwise disjoint sets each spanning e, starting with {e}, or nullopt.
/// Throws CapacityError above limits().spanned.
std::optional<std::vector<ElementSet>> k_spanning_sets(const Matroid& m, Element e,
                                                      std::size_t k);
bool is_k_spanned(const Matroid& m, Element e, std::size_t k);
/// First element of the ground set that is k-spanned, with its witness sets.
struct SpannedWitness {
  Element element;
  std::vector<ElementSet> spanning_sets;
};
std::optional<SpannedWitness> find_k_spanned(const Matroid& m, std::size_t k);

// Transformers.

/// M|S. Throws PreconditionError unless s ⊆ ground.
MatroidPtr restriction(MatroidPtr m, ElementSet s);
/// M/T for an independent T: Z is independent iff Z ∪ T is.
MatroidPtr contraction(MatroidPtr m, ElementSet t);
/// Independent sets of size at most t.
MatroidPtr truncation(MatroidPtr m, std::size_t t);
/// M^k: sets partitionable into k independent sets of m (matroid partition).
MatroidPtr union_power(MatroidPtr m, std::size_t k);

/// Forwards every query to `inner` and bumps a shared counter, so one count
/// can span a chain of derived views.
class CountingMatroid final : public Matroid {
 public:
  CountingMatroid(MatroidPtr inner, std::shared_ptr<std::atomic<std::uint64_t>> counter);
  std::string kind() const override;
  const MatroidPtr& inner() const { return inner_; }

 protected:
  bool test_independent(ElementSet x) const override;

 private:
  MatroidPtr inner_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

/// Every independent set, in increasing bitmask order. Ground must be within
/// limits().axioms.
std::vector<ElementSet> independent_family(const Matroid& m);

/// Reports every violated instance of (I0), (I1), (I2) for an explicit family
/// over `ground`. (I1) is reported as (X, e) with X - e missing; (I2) as
/// (X, Y) with no e in Y ∖ X extending X.
AxiomReport axioms_check(std::span<const ElementSet> family, ElementSet ground);

}  // namespace matpart

#endif  // MATPART_MATROID_HPP
