#ifndef MATPART_ELEMENT_SET_HPP
#define MATPART_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace matpart {

using Element = std::size_t;

/// A subset of a dense universe {0, ..., 63}, stored as a bitmask.
///
/// Sets carry no reference to their universe; operations that need one
/// (complement, validation) take it explicitly as another ElementSet.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements);

  /// {0, 1, ..., n-1}; throws CapacityError for n > 64.
  static ElementSet first(std::size_t n);
  static ElementSet singleton(Element e);
  static ElementSet from_vector(const std::vector<Element>& elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const {
    return e < kMaxElements && ((bits_ >> e) & 1U) != 0;
  }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint_from(ElementSet other) const {
    return (bits_ & other.bits_) == 0;
  }
  /// Neither of A∩B, A∖B, B∖A is empty.
  constexpr bool intersects_properly(ElementSet other) const {
    return (bits_ & other.bits_) != 0 && (bits_ & ~other.bits_) != 0 &&
           (other.bits_ & ~bits_) != 0;
  }

  ElementSet with(Element e) const;
  ElementSet without(Element e) const;
  void insert(Element e);
  void erase(Element e);

  /// Smallest member; std::nullopt for the empty set.
  std::optional<Element> min() const;
  /// Largest member; std::nullopt for the empty set.
  std::optional<Element> max() const;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const;
  /// 0/1 entries for elements 0..n-1.
  std::vector<int> to_incidence_vector(std::size_t n) const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  /// "{0,3,5}".
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of s in increasing bitmask order, the empty
/// set first.
template <class Fn>
void for_each_subset(ElementSet s, Fn&& fn) {
  const std::uint64_t mask = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Like for_each_subset but stops as soon as fn returns false. Returns true
/// iff every call returned true.
template <class Fn>
bool all_subsets(ElementSet s, Fn&& fn) {
  const std::uint64_t mask = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    if (!fn(ElementSet(sub))) return false;
    if (sub == mask) return true;
    sub = (sub - mask) & mask;
  }
}

/// The finite universe E = {0, ..., size-1} with optional distinct labels.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t size);
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  ElementSet all() const { return ElementSet::first(size_); }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Label of e, or its decimal index when unlabeled.
  std::string label(Element e) const;
  std::optional<Element> find(const std::string& label) const;

  /// "{a,b,c}" using labels.
  std::string format(ElementSet s) const;
  std::vector<std::string> label_list(ElementSet s) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace matpart

#endif  // MATPART_ELEMENT_SET_HPP
