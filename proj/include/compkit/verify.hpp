#pragma once

#include <string>
#include <vector>

#include "compkit/domain.hpp"

namespace compkit {

struct VerifyResult {
    bool ok = true;
    long long instances = 0; // (n,k,a,b) cells visited
    long long checks = 0;    // individual assertions evaluated
    std::string first_failure;
};

// Sorted-list equality with a diagnostic that names the failing instance.
bool check_sorted_equal(const std::vector<Composition>& got,
                        const std::vector<Composition>& expected, const std::string& label,
                        std::string& diagnostic);

/* Sweeps every instance with n <= nmax, k <= kmax, 0 <= a <= b <= bmax and
 * cross-checks, per cell: all four composition generators against the brute
 * force oracle, both partition generators against theirs, every count
 * recursion against the matching output length, the two binomial recursions
 * against their interval counterparts, and the cardinality transport of the
 * [a,b] -> [0,b-a] shift. Stops at the first mismatch. */
VerifyResult verify_sweep(int nmax, int kmax, int bmax);

} // namespace compkit
