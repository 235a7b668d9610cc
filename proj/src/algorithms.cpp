#include "matpart/algorithms.hpp"

#include <array>
#include <deque>
#include <string>

#include "matpart/errors.hpp"

namespace matpart {

namespace {

constexpr int kUnowned = -1;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void validate_list(std::span<const MatroidPtr> matroids, ElementSet x) {
  for (const auto& m : matroids) {
    if (m->universe_size() != matroids.front()->universe_size()) {
      throw ValidationError("matroid partition needs a shared universe");
    }
    if (!x.subset_of(m->ground())) {
      throw ValidationError("target set " + x.to_string() + " is not inside the ground set of every matroid");
    }
  }
}

// Exchange-graph state shared by the covering and witness passes.
class PartitionState {
 public:
  explicit PartitionState(std::span<const MatroidPtr> matroids)
      : matroids_(matroids), parts_(matroids.size()) {
    owner_.fill(kUnowned);
  }

  /// Inserts x along a shortest exchange path; false if none exists.
  bool augment(Element x) {
    std::array<std::size_t, ElementSet::kMaxElements> prev;
    prev.fill(kNone);
    ElementSet visited = ElementSet::singleton(x);
    std::deque<Element> queue{x};
    while (!queue.empty()) {
      const Element y = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (owner_[y] == static_cast<int>(j)) continue;
        if (independent(j, parts_[j].with(y))) {
          apply_path(y, j, prev);
          return true;
        }
      }
      expand(y, visited, queue, &prev);
    }
    return false;
  }

  /// Everything reachable from `sources` in the exchange graph.
  ElementSet reachable(ElementSet sources) {
    ElementSet visited = sources;
    std::deque<Element> queue(sources.begin(), sources.end());
    while (!queue.empty()) {
      const Element y = queue.front();
      queue.pop_front();
      expand(y, visited, queue, nullptr);
    }
    return visited;
  }

  const std::vector<ElementSet>& parts() const { return parts_; }
  std::uint64_t calls() const { return calls_; }

 private:
  bool independent(std::size_t j, ElementSet s) {
    ++calls_;
    return matroids_[j]->independent(s);
  }

  void expand(Element y, ElementSet& visited, std::deque<Element>& queue,
              std::array<std::size_t, ElementSet::kMaxElements>* prev) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (owner_[y] == static_cast<int>(j)) continue;
      for (Element z : parts_[j] - visited) {
        if (independent(j, parts_[j].without(z).with(y))) {
          visited.insert(z);
          if (prev != nullptr) (*prev)[z] = y;
          queue.push_back(z);
        }
      }
    }
  }

  void apply_path(Element last, std::size_t sink_part,
                  const std::array<std::size_t, ElementSet::kMaxElements>& prev) {
    Element e = last;
    std::size_t target = sink_part;
    while (true) {
      const int old = owner_[e];
      parts_[target].insert(e);
      owner_[e] = static_cast<int>(target);
      if (old == kUnowned) break;
      parts_[static_cast<std::size_t>(old)].erase(e);
      target = static_cast<std::size_t>(old);
      e = prev[e];
    }
  }

  std::span<const MatroidPtr> matroids_;
  std::vector<ElementSet> parts_;
  std::array<int, ElementSet::kMaxElements> owner_;
  std::uint64_t calls_ = 0;
};

void verify_parts(std::span<const MatroidPtr> matroids, const std::vector<ElementSet>& parts) {
  ElementSet seen;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (!parts[j].disjoint_from(seen) || !matroids[j]->independent(parts[j])) {
      throw InternalError("matroid partition produced an invalid part " + parts[j].to_string());
    }
    seen |= parts[j];
  }
}

}  // namespace

ElementSet PartitionResult::covered_set() const {
  ElementSet s;
  for (ElementSet p : parts) s |= p;
  return s;
}

PartitionResult matroid_partition(std::span<const MatroidPtr> matroids, ElementSet x) {
  validate_list(matroids, x);
  PartitionResult result;
  if (matroids.empty()) {
    result.covered = x.empty();
    if (!result.covered) result.deficiency_witness = x;
    return result;
  }
  PartitionState state(matroids);
  ElementSet uncovered;
  for (Element e : x) {
    if (!state.augment(e)) uncovered.insert(e);
  }
  verify_parts(matroids, state.parts());
  result.parts = state.parts();
  result.covered = uncovered.empty();
  if (!result.covered) result.deficiency_witness = state.reachable(uncovered);
  result.oracle_calls = state.calls();
  return result;
}

bool partitionable(std::span<const MatroidPtr> matroids, ElementSet x) {
  validate_list(matroids, x);
  if (matroids.empty()) return x.empty();
  PartitionState state(matroids);
  for (Element e : x) {
    // The union is a matroid: an element that cannot join now never will.
    if (!state.augment(e)) return false;
  }
  return true;
}

std::size_t union_rank(std::span<const MatroidPtr> matroids, ElementSet x) {
  return matroid_partition(matroids, x).covered_set().size();
}

std::vector<MatroidPtr> repeated(const MatroidPtr& m, std::size_t k) {
  return std::vector<MatroidPtr>(k, m);
}

bool certifies_deficiency(std::span<const MatroidPtr> matroids, ElementSet x, ElementSet y) {
  if (!y.subset_of(x)) return false;
  std::size_t bound = (x - y).size();
  for (const auto& m : matroids) bound += rank(*m, y);
  return bound < x.size();
}

IntersectionResult matroid_intersection_max(const Matroid& m1, const Matroid& m2) {
  if (m1.ground() != m2.ground() || m1.universe_size() != m2.universe_size()) {
    throw ValidationError("matroid intersection needs a shared ground set");
  }
  const ElementSet ground = m1.ground();
  IntersectionResult result;
  std::uint64_t calls = 0;
  auto ind1 = [&](ElementSet s) { ++calls; return m1.independent(s); };
  auto ind2 = [&](ElementSet s) { ++calls; return m2.independent(s); };

  ElementSet current;
  for (Element e : ground) {
    const ElementSet next = current.with(e);
    if (ind1(next) && ind2(next)) current = next;
  }

  while (true) {
    const ElementSet outside = ground - current;
    std::array<std::size_t, ElementSet::kMaxElements> prev;
    prev.fill(kNone);
    ElementSet visited;
    std::deque<Element> queue;
    for (Element z : outside) {
      if (ind1(current.with(z))) {
        visited.insert(z);
        queue.push_back(z);
      }
    }
    std::optional<Element> end;
    std::array<int, ElementSet::kMaxElements> sink_known;
    sink_known.fill(-1);
    while (!queue.empty()) {
      const Element v = queue.front();
      queue.pop_front();
      if (!current.contains(v)) {
        if (sink_known[v] < 0) sink_known[v] = ind2(current.with(v)) ? 1 : 0;
        if (sink_known[v] == 1) {
          end = v;
          break;
        }
        for (Element y : current - visited) {
          if (ind2(current.without(y).with(v))) {
            visited.insert(y);
            prev[y] = v;
            queue.push_back(y);
          }
        }
      } else {
        for (Element z : (ground - current) - visited) {
          if (ind1(current.without(v).with(z))) {
            visited.insert(z);
            prev[z] = v;
            queue.push_back(z);
          }
        }
      }
    }
    if (!end) {
      result.certificate = IntersectionCertificate{ground - visited, visited};
      break;
    }
    for (std::size_t v = *end; v != kNone; v = prev[v]) current ^= ElementSet::singleton(v);
    ++result.augmentations;
  }
  result.common_set = current;
  result.oracle_calls = calls;
  const auto& cert = *result.certificate;
  result.is_max = rank(m1, cert.first) + rank(m2, cert.second) == current.size() &&
                  m1.independent(current) && m2.independent(current);
  return result;
}

CommonBaseResult common_base(const Matroid& m1, const Matroid& m2) {
  CommonBaseResult result;
  result.rank1 = rank(m1);
  result.rank2 = rank(m2);
  if (result.rank1 != result.rank2) return result;
  result.intersection = matroid_intersection_max(m1, m2);
  if (result.intersection->common_set.size() == result.rank1) {
    result.base = result.intersection->common_set;
  }
  return result;
}

}  // namespace matpart
