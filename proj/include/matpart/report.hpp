#ifndef MATPART_REPORT_HPP
#define MATPART_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "matpart/element_set.hpp"

namespace matpart {

/// One failed axiom instance. `sets` and `elements` are the witnesses in the
/// order the axiom names them, e.g. (X, Y) and e for (J1).
struct Violation {
  std::string axiom;
  std::vector<ElementSet> sets;
  std::vector<Element> elements;

  bool operator==(const Violation&) const = default;
};

struct AxiomReport {
  /// At most kMaxRecorded witnesses are stored; violation_count is exact.
  static constexpr std::size_t kMaxRecorded = 100000;

  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::vector<std::string> notes;

  bool passed() const { return violation_count == 0; }
  void add(Violation v);
  /// Number of violations whose axiom id equals `axiom`.
  std::size_t count(const std::string& axiom) const;
  bool contains(const Violation& v) const;
  void merge(const AxiomReport& other);
};

}  // namespace matpart

#endif  // MATPART_REPORT_HPP
