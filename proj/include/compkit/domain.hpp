#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace compkit {

// A composition is stored as its parts, first part at index 0. A partition
// is a composition whose parts are weakly decreasing.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

/* The set of values a single part may take: either a contiguous interval
 * [a,b] or an explicit finite set of nonnegative integers. The interval
 * form stays symbolic so recursions can use closed-form bounds instead of
 * scanning a value list. */
class PartDomain {
public:
    static PartDomain interval(int a, int b);
    static PartDomain explicit_set(std::vector<int> values);

    bool is_interval() const { return interval_; }
    int min_value() const { return interval_ ? a_ : values_.front(); }
    int max_value() const { return interval_ ? b_ : values_.back(); }
    std::size_t size() const;
    bool contains(int x) const;

    // All values in increasing order; materializes the interval on demand.
    std::vector<int> values() const;

    // Calls f(x) for every domain value x with lo <= x <= hi, ascending.
    template <class F>
    void for_each_value(int lo, int hi, F&& f) const {
        if (interval_) {
            for (int x = std::max(a_, lo), e = std::min(b_, hi); x <= e; ++x) f(x);
        } else {
            auto it = std::lower_bound(values_.begin(), values_.end(), lo);
            for (; it != values_.end() && *it <= hi; ++it) f(*it);
        }
    }

    bool operator==(const PartDomain&) const = default;

    std::string to_string() const;

private:
    PartDomain(bool is_interval, int a, int b, std::vector<int> values);

    bool interval_;
    int a_;
    int b_;
    std::vector<int> values_; // explicit form only, strictly increasing
};

// A counting/generation problem instance. Construction rejects negative n
// or k; everything downstream may assume both are nonnegative.
struct CompositionSpec {
    CompositionSpec(int n_, int k_, PartDomain domain_);

    int n;
    int k;
    PartDomain domain;
};

struct KRange {
    int k_min = 0;
    int k_max = 0;
};

// Necessary feasibility bound k*min <= n <= k*max; exact for intervals.
bool is_feasible(const CompositionSpec& spec);

// True iff parts has length k, sums to n and every part is in the domain.
bool validate_composition(const Composition& parts, const CompositionSpec& spec);

bool is_weakly_decreasing(const std::vector<int>& parts);

} // namespace compkit
