#include "compkit/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace compkit {

namespace {
constexpr double kMaxProductSize = 1e8;
}

std::vector<Composition> brute_compositions(int n, int k, const PartDomain& domain) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("brute_compositions: n and k must be nonnegative");
    const std::vector<int> vals = domain.values();
    if (std::pow(static_cast<double>(vals.size()), static_cast<double>(k)) > kMaxProductSize)
        throw std::invalid_argument("brute_compositions: |domain|^k exceeds the enumeration guard");

    std::vector<Composition> out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }

    // Odometer over vals^k with an incrementally maintained sum. Positions
    // advance ascending, rightmost fastest, so output order is already
    // lexicographic.
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    long long sum = static_cast<long long>(vals.front()) * k;
    for (;;) {
        if (sum == n) {
            Composition c(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = vals[idx[static_cast<std::size_t>(i)]];
            out.push_back(std::move(c));
        }
        int pos = k - 1;
        while (pos >= 0) {
            auto& d = idx[static_cast<std::size_t>(pos)];
            if (d + 1 < vals.size()) {
                sum += vals[d + 1] - vals[d];
                ++d;
                break;
            }
            sum += vals.front() - vals[d];
            d = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<Partition> brute_partitions(int n, int k, const PartDomain& domain) {
    std::vector<Partition> out;
    for (auto& c : brute_compositions(n, k, domain)) {
        if (is_weakly_decreasing(c)) out.push_back(std::move(c));
    }
    return out;
}

} // namespace compkit
