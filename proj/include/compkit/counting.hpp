#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <utility>

#include "compkit/domain.hpp"

namespace compkit {

// Counts grow exponentially in n and k; fixed-width integers would silently
// overflow, so every count is arbitrary precision.
using BigInt = mpz_class;

/* Memoized count of compositions of n into exactly k parts from a fixed
 * domain A:
 *
 *     c(n,k) = sum over x in A with x <= n of c(n-x, k-1),   c(0,0) = 1.
 *
 * Memo entries are a pure function of (n,k,domain) and are write-once; a
 * table is reusable across queries. One table per domain keeps keys small. */
class CountTable {
public:
    explicit CountTable(PartDomain domain);

    const BigInt& count(int n, int k);

    const PartDomain& domain() const { return domain_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    PartDomain domain_;
    std::map<std::pair<int, int>, BigInt> memo_;
};

/* c(n,k) over the interval [lower, upper] via the structurally different
 * redistribution recursion: choose how many of the k positions carry the
 * maximal value b, then recurse on [lower, b-1]:
 *
 *     c_[a,b](n,k) = sum over i of C(k,i) * c_[a,b-1](n - b*i, k - i),
 *
 * with 0 <= i <= k and n - b*i >= (k-i)*a, base b == a: 1 iff n == k*a.
 * Independent of CountTable; the two serve as each other's cross-check. */
class BinomialCountTable {
public:
    explicit BinomialCountTable(int lower);

    const BigInt& count(int n, int k, int upper);

    int lower() const { return lower_; }

private:
    int lower_;
    std::map<std::tuple<int, int, int>, BigInt> memo_;
};

/* p(n,k,lo): partitions of n into exactly k parts, each in [lo, upper] with
 * the table's fixed upper bound. The final (smallest) part x tightens the
 * moving lower bound, which is why lo is part of the key:
 *
 *     p(n,k,lo) = sum over x in [lo, min(upper, n/k)] of p(n-x, k-1, x),
 *     p(0,0,.) = 1. */
class PartitionCountTable {
public:
    explicit PartitionCountTable(int upper);

    const BigInt& count(int n, int k, int lower);

    int upper() const { return upper_; }

private:
    int upper_;
    std::map<std::tuple<int, int, int>, BigInt> memo_;
};

/* Partition count over an arbitrary finite domain A: the smallest part x
 * restricts the remaining k-1 parts to {y in A : y >= x}, tracked as an
 * index into the sorted value list. */
class SetPartitionCountTable {
public:
    explicit SetPartitionCountTable(PartDomain domain);

    const BigInt& count(int n, int k);

    const PartDomain& domain() const { return domain_; }

private:
    const BigInt& count_from(int n, int k, int min_index);

    PartDomain domain_;
    std::vector<int> values_;
    std::map<std::tuple<int, int, int>, BigInt> memo_;
};

// Partition analogue of BinomialCountTable: i parts equal to the maximal
// value b, no position choice because parts are unordered.
class PartitionBinomialCountTable {
public:
    explicit PartitionBinomialCountTable(int lower);

    const BigInt& count(int n, int k, int upper);

    int lower() const { return lower_; }

private:
    int lower_;
    std::map<std::tuple<int, int, int>, BigInt> memo_;
};

// One-shot conveniences; each builds a fresh table. Reuse the table types
// directly when issuing many queries against one domain.

BigInt count_fixed_k(int n, int k, const PartDomain& domain);

// Compositions of n with any number of parts >= 1. Throws
// std::invalid_argument when 0 is in the domain (the count diverges).
BigInt count_any_k(int n, const PartDomain& domain);

BigInt count_k_range(int n, KRange kr, const PartDomain& domain);

BigInt count_fixed_k_binomial(int n, int k, int a, int b);

BigInt count_partitions_fixed_k(int n, int k, int a, int b);

// Partitions of n with any number of parts >= 1, parts in [a,b]. Throws
// std::invalid_argument when a == 0 (the count diverges).
BigInt count_partitions_any_k(int n, int a, int b);

BigInt count_partitions_set(int n, int k, const PartDomain& domain);

BigInt count_partitions_binomial(int n, int k, int a, int b);

} // namespace compkit
