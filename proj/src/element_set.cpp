#include "matpart/element_set.hpp"

#include <sstream>
#include <unordered_set>

#include "matpart/errors.hpp"

namespace matpart {

namespace {

void check_index(Element e) {
  if (e >= ElementSet::kMaxElements) {
    throw CapacityError("element index " + std::to_string(e) + " exceeds the 64-element limit");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<Element> elements) {
  for (Element e : elements) insert(e);
}

ElementSet ElementSet::first(std::size_t n) {
  if (n > kMaxElements) {
    throw CapacityError("ground set of size " + std::to_string(n) +
                        " exceeds the 64-element limit");
  }
  return ElementSet(n == kMaxElements ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

ElementSet ElementSet::singleton(Element e) {
  check_index(e);
  return ElementSet(std::uint64_t{1} << e);
}

ElementSet ElementSet::from_vector(const std::vector<Element>& elements) {
  ElementSet s;
  for (Element e : elements) s.insert(e);
  return s;
}

ElementSet ElementSet::with(Element e) const { return *this | singleton(e); }

ElementSet ElementSet::without(Element e) const { return *this - singleton(e); }

void ElementSet::insert(Element e) { *this |= singleton(e); }

void ElementSet::erase(Element e) { *this -= singleton(e); }

std::optional<Element> ElementSet::min() const {
  if (empty()) return std::nullopt;
  return static_cast<Element>(std::countr_zero(bits_));
}

std::optional<Element> ElementSet::max() const {
  if (empty()) return std::nullopt;
  return static_cast<Element>(63 - std::countl_zero(bits_));
}

std::vector<Element> ElementSet::to_vector() const { return {begin(), end()}; }

std::vector<int> ElementSet::to_incidence_vector(std::size_t n) const {
  std::vector<int> v(n, 0);
  for (Element e : *this) {
    if (e < n) v[e] = 1;
  }
  return v;
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_item = true;
  for (Element e : *this) {
    if (!first_item) out << ',';
    out << e;
    first_item = false;
  }
  out << '}';
  return out.str();
}

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size > ElementSet::kMaxElements) {
    throw CapacityError("ground set of size " + std::to_string(size) +
                        " exceeds the 64-element limit");
  }
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : GroundSet(labels.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw ValidationError("duplicate element label '" + l + "'");
  }
  labels_ = std::move(labels);
}

std::string GroundSet::label(Element e) const {
  if (e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

std::optional<Element> GroundSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first_item = true;
  for (Element e : s) {
    if (!first_item) out += ',';
    out += label(e);
    first_item = false;
  }
  return out + "}";
}

std::vector<std::string> GroundSet::label_list(ElementSet s) const {
  std::vector<std::string> out;
  for (Element e : s) out.push_back(label(e));
  return out;
}

}  // namespace matpart
