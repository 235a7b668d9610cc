#include "matpart/limits.hpp"

#include <cstdlib>
#include <string>

#include "matpart/errors.hpp"

namespace matpart {

namespace {

Limits& mutable_limits() {
  static Limits current = limits_from_environment(Limits{});
  return current;
}

void apply(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw ValidationError(std::string("environment variable ") + name +
                          " is not a nonnegative integer: '" + raw + "'");
  }
  slot = static_cast<std::size_t>(v);
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

Limits limits_from_environment(Limits base) {
  apply("MATPART_SPANNED_THRESHOLD", base.spanned);
  apply("MATPART_AXIOMS_THRESHOLD", base.axioms);
  apply("MATPART_BRUTE_FORCE_THRESHOLD", base.brute_force);
  apply("MATPART_ENUMERATION_THRESHOLD", base.enumeration);
  apply("MATPART_PAIR_THRESHOLD", base.pair_check);
  apply("MATPART_POLYTOPE_THRESHOLD", base.polytope);
  apply("MATPART_TABLE_THRESHOLD", base.submodular_table);
  return base;
}

}  // namespace matpart
