#include "compkit/generation.hpp"

#include <algorithm>

namespace compkit {

const char* kind_name(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::NaiveSum: return "naive";
    case GeneratorKind::BinomialSplit: return "binomial";
    case GeneratorKind::IntervalRecursion: return "interval";
    case GeneratorKind::Successor: return "successor";
    }
    return "?";
}

std::optional<GeneratorKind> kind_from_name(std::string_view name) {
    if (name == "naive") return GeneratorKind::NaiveSum;
    if (name == "binomial") return GeneratorKind::BinomialSplit;
    if (name == "interval") return GeneratorKind::IntervalRecursion;
    if (name == "successor") return GeneratorKind::Successor;
    return std::nullopt;
}

const char* partition_kind_name(PartitionGeneratorKind kind) {
    switch (kind) {
    case PartitionGeneratorKind::NaiveSuffix: return "naive";
    case PartitionGeneratorKind::BinomialSplit: return "binomial";
    }
    return "?";
}

namespace detail {

void fill_min_interval(std::vector<int>& parts, int from, int rem, int a, int b) {
    const int k = static_cast<int>(parts.size());
    for (int pos = from; pos < k; ++pos) {
        const long long after = k - 1 - pos;
        const int x = std::max<long long>(a, rem - after * b);
        parts[static_cast<std::size_t>(pos)] = x;
        rem -= x;
    }
}

bool fill_least_set(std::vector<int>& parts, int from, int rem, const std::vector<int>& values) {
    const int k = static_cast<int>(parts.size());
    if (from == k) return rem == 0;
    const long long after = k - 1 - from;
    const long long lo = after * values.front();
    const long long hi = after * values.back();
    for (int v : values) {
        const long long rest = static_cast<long long>(rem) - v;
        if (rest < lo) break; // larger values only shrink the rest
        if (rest > hi) continue;
        parts[static_cast<std::size_t>(from)] = v;
        if (fill_least_set(parts, from + 1, static_cast<int>(rest), values)) return true;
    }
    return false;
}

bool successor_step_interval(std::vector<int>& parts, int a, int b) {
    const int k = static_cast<int>(parts.size());
    long long suffix = 0; // sum of parts[j..k-1]
    for (int j = k - 1; j >= 0; --j) {
        suffix += parts[static_cast<std::size_t>(j)];
        const long long after = k - 1 - j;
        const long long lo = std::max<long long>(parts[static_cast<std::size_t>(j)] + 1, suffix - after * b);
        const long long hi = std::min<long long>(b, suffix - after * a);
        if (lo <= hi) {
            parts[static_cast<std::size_t>(j)] = static_cast<int>(lo);
            fill_min_interval(parts, j + 1, static_cast<int>(suffix - lo), a, b);
            return true;
        }
    }
    return false;
}

bool successor_step_set(std::vector<int>& parts, const std::vector<int>& values) {
    const int k = static_cast<int>(parts.size());
    // Snapshot suffix sums up front: failed refill attempts scribble on the
    // tail, so they cannot be recomputed from parts afterwards.
    std::vector<long long> suffix(static_cast<std::size_t>(k) + 1, 0);
    for (int j = k - 1; j >= 0; --j)
        suffix[static_cast<std::size_t>(j)] =
            suffix[static_cast<std::size_t>(j) + 1] + parts[static_cast<std::size_t>(j)];
    for (int j = k - 1; j >= 0; --j) {
        const long long after = k - 1 - j;
        const long long lo = after * values.front();
        const long long hi = after * values.back();
        auto it = std::upper_bound(values.begin(), values.end(), parts[static_cast<std::size_t>(j)]);
        for (; it != values.end(); ++it) {
            const long long rest = suffix[static_cast<std::size_t>(j)] - *it;
            if (rest < lo) break;
            if (rest > hi) continue;
            if (fill_least_set(parts, j + 1, static_cast<int>(rest), values)) {
                parts[static_cast<std::size_t>(j)] = *it;
                return true;
            }
        }
    }
    return false;
}

} // namespace detail

std::optional<Composition> first_composition(const CompositionSpec& spec) {
    if (spec.k == 0) {
        if (spec.n == 0) return Composition{};
        return std::nullopt;
    }
    Composition parts(static_cast<std::size_t>(spec.k), 0);
    if (spec.domain.is_interval()) {
        const int a = spec.domain.min_value();
        const int b = spec.domain.max_value();
        if (static_cast<long long>(spec.k) * a > spec.n || static_cast<long long>(spec.k) * b < spec.n)
            return std::nullopt;
        detail::fill_min_interval(parts, 0, spec.n, a, b);
        return parts;
    }
    const std::vector<int> vals = spec.domain.values();
    if (detail::fill_least_set(parts, 0, spec.n, vals)) return parts;
    return std::nullopt;
}

std::optional<Composition> successor(const Composition& current, const CompositionSpec& spec) {
    if (!validate_composition(current, spec))
        throw std::invalid_argument("successor: current is not a member of the composition set");
    Composition next = current;
    bool advanced;
    if (spec.domain.is_interval()) {
        advanced = detail::successor_step_interval(next, spec.domain.min_value(),
                                                   spec.domain.max_value());
    } else {
        advanced = detail::successor_step_set(next, spec.domain.values());
    }
    if (!advanced) return std::nullopt;
    return next;
}

} // namespace compkit
