#pragma once

#include <vector>

#include "compkit/domain.hpp"

namespace compkit {

/* Ground-truth enumerators used by the test suites. Both walk the full
 * |domain|^k product with an odometer and filter by sum; they share no
 * recursion with the counting or generation code, so agreement with those
 * modules is evidence rather than tautology. Slow by design.
 *
 * Throws std::invalid_argument when |domain|^k exceeds 10^8. */
std::vector<Composition> brute_compositions(int n, int k, const PartDomain& domain);

// brute_compositions filtered to weakly decreasing tuples.
std::vector<Partition> brute_partitions(int n, int k, const PartDomain& domain);

} // namespace compkit
