#include "matpart/report.hpp"

#include <algorithm>

namespace matpart {

void AxiomReport::add(Violation v) {
  ++violation_count;
  if (violations.size() < kMaxRecorded) violations.push_back(std::move(v));
}

std::size_t AxiomReport::count(const std::string& axiom) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

bool AxiomReport::contains(const Violation& v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations) {
    if (violations.size() < kMaxRecorded) violations.push_back(v);
  }
  violation_count += other.violation_count;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace matpart
