#ifndef MATPART_LIMITS_HPP
#define MATPART_LIMITS_HPP

#include <cstddef>

namespace matpart {

/// Size thresholds for the exhaustive operations. Exceeding one raises
/// CapacityError; nothing silently approximates.
struct Limits {
  std::size_t spanned = 20;           // is_k_spanned, circuit enumeration
  std::size_t axioms = 20;            // axioms_check, explicit matroids
  std::size_t brute_force = 12;       // bf_partition_exists
  std::size_t enumeration = 16;       // bf_enumerate_family, bf_rank_formula
  std::size_t pair_check = 12;        // check_paramodular, check_local_cross
  std::size_t polytope = 16;          // polytope_membership, gmatroid checks
  std::size_t submodular_table = 10;  // intersecting-submodular specs
};

/// Process-wide limits. Set them before starting concurrent work.
const Limits& limits();
void set_limits(const Limits& l);

/// Applies MATPART_SPANNED_THRESHOLD, MATPART_AXIOMS_THRESHOLD,
/// MATPART_BRUTE_FORCE_THRESHOLD, MATPART_ENUMERATION_THRESHOLD,
/// MATPART_PAIR_THRESHOLD, MATPART_POLYTOPE_THRESHOLD and
/// MATPART_TABLE_THRESHOLD on top of `base`.
Limits limits_from_environment(Limits base);

}  // namespace matpart

#endif  // MATPART_LIMITS_HPP
