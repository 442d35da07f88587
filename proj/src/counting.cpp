#include "compkit/counting.hpp"

#include <stdexcept>

namespace compkit {

namespace {

void require_nonnegative(int n, int k, const char* who) {
    if (n < 0 || k < 0)
        throw std::invalid_argument(std::string(who) + ": n and k must be nonnegative");
}

void require_interval_bounds(int a, int b, const char* who) {
    if (a < 0 || b < a)
        throw std::invalid_argument(std::string(who) + ": requires 0 <= a <= b");
}

BigInt binomial_coefficient(int n, int r) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

} // namespace

CountTable::CountTable(PartDomain domain) : domain_(std::move(domain)) {}

const BigInt& CountTable::count(int n, int k) {
    require_nonnegative(n, k, "CountTable::count");
    const auto key = std::make_pair(n, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    if (k == 0) {
        total = (n == 0) ? 1 : 0;
    } else {
        domain_.for_each_value(0, n, [&](int x) { total += count(n - x, k - 1); });
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

BinomialCountTable::BinomialCountTable(int lower) : lower_(lower) {
    if (lower < 0)
        throw std::invalid_argument("BinomialCountTable: lower bound must be nonnegative");
}

const BigInt& BinomialCountTable::count(int n, int k, int upper) {
    require_nonnegative(n, k, "BinomialCountTable::count");
    if (upper < lower_)
        throw std::invalid_argument("BinomialCountTable::count: upper bound below table lower bound");
    const auto key = std::make_tuple(n, k, upper);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    if (k == 0) {
        total = (n == 0) ? 1 : 0;
    } else if (upper == lower_) {
        total = (static_cast<long long>(k) * lower_ == n) ? 1 : 0;
    } else {
        // n - upper*i >= (k-i)*lower keeps i within the feasible range; the
        // left side decreases in i, so the loop can stop at first failure.
        for (int i = 0; i <= k; ++i) {
            const long long rest = static_cast<long long>(n) - static_cast<long long>(upper) * i;
            if (rest < static_cast<long long>(k - i) * lower_) break;
            total += binomial_coefficient(k, i) * count(static_cast<int>(rest), k - i, upper - 1);
        }
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

PartitionCountTable::PartitionCountTable(int upper) : upper_(upper) {
    if (upper < 0)
        throw std::invalid_argument("PartitionCountTable: upper bound must be nonnegative");
}

const BigInt& PartitionCountTable::count(int n, int k, int lower) {
    require_nonnegative(n, k, "PartitionCountTable::count");
    const auto key = std::make_tuple(n, k, lower);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    if (k == 0) {
        total = (n == 0) ? 1 : 0;
    } else {
        // Smallest part x; the remaining k-1 parts are all >= x, so x <= n/k.
        const int hi = std::min(upper_, n / k);
        for (int x = lower; x <= hi; ++x) total += count(n - x, k - 1, x);
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

SetPartitionCountTable::SetPartitionCountTable(PartDomain domain)
    : domain_(std::move(domain)), values_(domain_.values()) {}

const BigInt& SetPartitionCountTable::count(int n, int k) {
    require_nonnegative(n, k, "SetPartitionCountTable::count");
    return count_from(n, k, 0);
}

const BigInt& SetPartitionCountTable::count_from(int n, int k, int min_index) {
    const auto key = std::make_tuple(n, k, min_index);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    if (k == 0) {
        total = (n == 0) ? 1 : 0;
    } else {
        for (int j = min_index; j < static_cast<int>(values_.size()); ++j) {
            const int x = values_[static_cast<std::size_t>(j)];
            if (static_cast<long long>(x) * k > n) break;
            total += count_from(n - x, k - 1, j);
        }
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

PartitionBinomialCountTable::PartitionBinomialCountTable(int lower) : lower_(lower) {
    if (lower < 0)
        throw std::invalid_argument("PartitionBinomialCountTable: lower bound must be nonnegative");
}

const BigInt& PartitionBinomialCountTable::count(int n, int k, int upper) {
    require_nonnegative(n, k, "PartitionBinomialCountTable::count");
    if (upper < lower_)
        throw std::invalid_argument(
            "PartitionBinomialCountTable::count: upper bound below table lower bound");
    const auto key = std::make_tuple(n, k, upper);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    if (k == 0) {
        total = (n == 0) ? 1 : 0;
    } else if (upper == lower_) {
        total = (static_cast<long long>(k) * lower_ == n) ? 1 : 0;
    } else {
        for (int i = 0; i <= k; ++i) {
            const long long rest = static_cast<long long>(n) - static_cast<long long>(upper) * i;
            if (rest < static_cast<long long>(k - i) * lower_) break;
            total += count(static_cast<int>(rest), k - i, upper - 1);
        }
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

BigInt count_fixed_k(int n, int k, const PartDomain& domain) {
    CountTable table(domain);
    return table.count(n, k);
}

BigInt count_any_k(int n, const PartDomain& domain) {
    if (n < 0) throw std::invalid_argument("count_any_k: n must be nonnegative");
    if (domain.contains(0))
        throw std::invalid_argument("count_any_k: domain contains 0, the count diverges");

    // Bottom-up over the target sum: c(m) = sum over x in A, x <= m of c(m-x).
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt total = 0;
        domain.for_each_value(0, m, [&](int x) { total += c[static_cast<std::size_t>(m - x)]; });
        c[static_cast<std::size_t>(m)] = std::move(total);
    }
    return c[static_cast<std::size_t>(n)];
}

BigInt count_k_range(int n, KRange kr, const PartDomain& domain) {
    if (kr.k_min < 0 || kr.k_max < kr.k_min)
        throw std::invalid_argument("count_k_range: requires 0 <= k_min <= k_max");
    CountTable table(domain);
    BigInt total = 0;
    for (int k = kr.k_min; k <= kr.k_max; ++k) total += table.count(n, k);
    return total;
}

BigInt count_fixed_k_binomial(int n, int k, int a, int b) {
    require_interval_bounds(a, b, "count_fixed_k_binomial");
    BinomialCountTable table(a);
    return table.count(n, k, b);
}

BigInt count_partitions_fixed_k(int n, int k, int a, int b) {
    require_interval_bounds(a, b, "count_partitions_fixed_k");
    PartitionCountTable table(b);
    return table.count(n, k, a);
}

BigInt count_partitions_any_k(int n, int a, int b) {
    require_interval_bounds(a, b, "count_partitions_any_k");
    if (n < 0) throw std::invalid_argument("count_partitions_any_k: n must be nonnegative");
    if (a == 0)
        throw std::invalid_argument("count_partitions_any_k: a == 0 makes the count diverge");
    PartitionCountTable table(b);
    BigInt total = 0;
    for (int k = 1; k <= n / a; ++k) total += table.count(n, k, a);
    return total;
}

BigInt count_partitions_set(int n, int k, const PartDomain& domain) {
    SetPartitionCountTable table(domain);
    return table.count(n, k);
}

BigInt count_partitions_binomial(int n, int k, int a, int b) {
    require_interval_bounds(a, b, "count_partitions_binomial");
    PartitionBinomialCountTable table(a);
    return table.count(n, k, b);
}

} // namespace compkit
