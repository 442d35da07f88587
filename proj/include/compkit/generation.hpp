#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "compkit/domain.hpp"

namespace compkit {

// The four composition generators the benchmark harness compares.
enum class GeneratorKind {
    NaiveSum,          // term-by-term expansion of the plain sum recursion; no pruning
    BinomialSplit,     // peel the maximal value off i of the k positions, recurse on [a,b-1]
    IntervalRecursion, // first-part expansion under the interval summation bounds
    Successor,         // lexicographic first composition + in-place successor steps
};

enum class PartitionGeneratorKind {
    NaiveSuffix,   // choose the smallest part, restrict the domain upward
    BinomialSplit, // multiplicity of the maximal value; no position choice
};

/* node_expansions counts one step per invocation of the recursive expansion
 * routine, the top-level call excluded; for Successor it counts one step per
 * composition produced. Degenerate instances whose only work happens in the
 * top-level call (k == 0, or a single-leaf recursion) count that emission as
 * one step, so node_expansions >= 1 whenever emitted >= 1. */
struct GenStats {
    std::uint64_t node_expansions = 0;
    std::uint64_t emitted = 0;
    double elapsed_seconds = 0.0;
};

const char* kind_name(GeneratorKind kind);
std::optional<GeneratorKind> kind_from_name(std::string_view name);
const char* partition_kind_name(PartitionGeneratorKind kind);

// Lexicographically least member of the composition set, or nullopt when
// the set is empty. Seeds the Successor generator.
std::optional<Composition> first_composition(const CompositionSpec& spec);

// Next composition in lexicographic order, or nullopt when current is the
// greatest. Throws std::invalid_argument when current is not a member.
std::optional<Composition> successor(const Composition& current, const CompositionSpec& spec);

namespace detail {

// Sinks may return void (always continue) or bool (false stops the stream).
template <class Sink, class... Args>
bool emit_to(Sink& sink, const Args&... args) {
    if constexpr (std::is_convertible_v<std::invoke_result_t<Sink&, const Args&...>, bool>) {
        return static_cast<bool>(sink(args...));
    } else {
        sink(args...);
        return true;
    }
}

// Rewrites parts[from..] with the lexicographically least filling of rem
// over [a,b]. Caller guarantees feasibility.
void fill_min_interval(std::vector<int>& parts, int from, int rem, int a, int b);

// Same over an explicit value list, via backtracking; false when impossible.
bool fill_least_set(std::vector<int>& parts, int from, int rem, const std::vector<int>& values);

// In-place lexicographic successor steps; false at the maximum. The general
// form may leave parts scrambled when it returns false.
bool successor_step_interval(std::vector<int>& parts, int a, int b);
bool successor_step_set(std::vector<int>& parts, const std::vector<int>& values);

template <class Sink>
class NaiveSumRunner {
public:
    NaiveSumRunner(const CompositionSpec& spec, GenStats& stats, Sink& sink)
        : domain_(spec.domain), stats_(stats), sink_(sink),
          buf_(static_cast<std::size_t>(spec.k)), k_(spec.k) {}

    void run(int n) { descend(n, 0); }

private:
    bool descend(int remaining, int depth) {
        if (depth > 0) ++stats_.node_expansions;
        if (depth == k_) {
            if (remaining == 0) {
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        bool keep_going = true;
        domain_.for_each_value(0, remaining, [&](int x) {
            if (!keep_going) return;
            buf_[static_cast<std::size_t>(depth)] = x;
            keep_going = descend(remaining - x, depth + 1);
        });
        return keep_going;
    }

    const PartDomain& domain_;
    GenStats& stats_;
    Sink& sink_;
    std::vector<int> buf_;
    int k_;
};

template <class Sink>
class IntervalRecursionRunner {
public:
    IntervalRecursionRunner(const CompositionSpec& spec, GenStats& stats, Sink& sink)
        : a_(spec.domain.min_value()), b_(spec.domain.max_value()), stats_(stats), sink_(sink),
          buf_(static_cast<std::size_t>(spec.k)), k_(spec.k) {}

    void run(int n) { descend(n, 0); }

private:
    bool descend(int remaining, int depth) {
        if (depth > 0) ++stats_.node_expansions;
        if (k_ - depth == 1) {
            if (a_ <= remaining && remaining <= b_) {
                buf_[static_cast<std::size_t>(depth)] = remaining;
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        // Remaining sum i after the first part x = remaining - i. The i >= 1
        // floor assumes a >= 1; with a == 0 it would cut off compositions
        // whose suffix is all zeros, so the floor drops to 0 there.
        const int lo = std::max(a_ == 0 ? 0 : 1, remaining - b_);
        const int hi = remaining - a_;
        for (int i = hi; i >= lo; --i) {
            buf_[static_cast<std::size_t>(depth)] = remaining - i;
            if (!descend(i, depth + 1)) return false;
        }
        return true;
    }

    int a_;
    int b_;
    GenStats& stats_;
    Sink& sink_;
    std::vector<int> buf_;
    int k_;
};

/* Open positions are kept on a doubly linked list in ascending order and
 * always hold the value a in the output buffer; placing a value unlinks the
 * position and the base case can therefore emit without touching the
 * buffer. Subset choices enumerate in lexicographic order by walking the
 * list left to right. */
template <class Sink>
class BinomialSplitRunner {
public:
    BinomialSplitRunner(const CompositionSpec& spec, GenStats& stats, Sink& sink)
        : a_(spec.domain.min_value()), stats_(stats), sink_(sink),
          buf_(static_cast<std::size_t>(spec.k), spec.domain.min_value()), k_(spec.k),
          nxt_(static_cast<std::size_t>(spec.k) + 1), prv_(static_cast<std::size_t>(spec.k) + 1) {
        for (int p = 0; p <= k_; ++p) {
            nxt_[static_cast<std::size_t>(p)] = (p + 1 <= k_) ? p + 1 : 0;
            prv_[static_cast<std::size_t>(p)] = (p - 1 >= 0) ? p - 1 : k_;
        }
        nxt_[static_cast<std::size_t>(k_)] = 0; // k_ is the list sentinel
    }

    void run(int n, int b) { descend(n, b, k_, true); }

private:
    bool descend(int remaining, int bcur, int m, bool root) {
        if (!root) ++stats_.node_expansions;
        if (m == 0) {
            if (remaining == 0) {
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        if (bcur == a_) {
            if (remaining == static_cast<long long>(m) * a_) {
                ++stats_.emitted; // open positions already hold a
                return emit_to(sink_, buf_);
            }
            return true;
        }
        // Multiplicity i of the value bcur: at least imin so the open
        // positions can absorb the rest under bcur-1, and small enough to
        // leave every open position its minimum a.
        const bool children_are_leaves = (bcur - 1 == a_);
        const long long over = static_cast<long long>(remaining) -
                               static_cast<long long>(m) * (bcur - 1);
        int i = over > 0 ? static_cast<int>(over) : 0;
        for (; i <= m; ++i) {
            const long long rest =
                static_cast<long long>(remaining) - static_cast<long long>(bcur) * i;
            if (rest < static_cast<long long>(m - i) * a_) break;
            if (i == 0) {
                if (children_are_leaves) {
                    // Inlined leaf: both i-bounds held, so it emits.
                    ++stats_.node_expansions;
                    ++stats_.emitted;
                    if (!emit_to(sink_, buf_)) return false;
                } else if (!descend(remaining, bcur - 1, m, false)) {
                    return false;
                }
                continue;
            }
            if (children_are_leaves) {
                if (!place_last(i, nxt_[static_cast<std::size_t>(k_)], bcur)) return false;
            } else if (!place(i, nxt_[static_cast<std::size_t>(k_)], static_cast<int>(rest), bcur,
                              m - i)) {
                return false;
            }
        }
        return true;
    }

    // Chooses count open positions at or after start (ascending), writes
    // bcur there, and descends once per complete choice. Restores the list
    // and the buffer before returning.
    bool place(int count, int start, int rest, int bcur, int child_m) {
        int* const nxt = nxt_.data();
        int* const prv = prv_.data();
        int* const buf = buf_.data();
        bool keep_going = true;
        for (int p = start; p != k_; p = nxt[p]) {
            buf[p] = bcur;
            const int before = prv[p];
            const int after = nxt[p];
            nxt[before] = after;
            prv[after] = before;
            keep_going = (count == 1) ? descend(rest, bcur - 1, child_m, false)
                                      : place(count - 1, after, rest, bcur, child_m);
            nxt[before] = p;
            prv[after] = p;
            buf[p] = a_;
            if (!keep_going) return false;
        }
        return true;
    }

    // Last level, children all emit: the i-bounds guarantee the remainder
    // is exactly (open positions)*a, and a leaf never reads the position
    // list, so the walk skips the unlink/relink bookkeeping.
    bool place_last(int count, int start, int bcur) {
        const int* const nxt = nxt_.data();
        int* const buf = buf_.data();
        for (int p = start; p != k_; p = nxt[p]) {
            buf[p] = bcur;
            bool keep_going;
            if (count == 1) {
                ++stats_.node_expansions;
                ++stats_.emitted;
                keep_going = emit_to(sink_, buf_);
            } else {
                keep_going = place_last(count - 1, nxt[p], bcur);
            }
            buf[p] = a_;
            if (!keep_going) return false;
        }
        return true;
    }

    int a_;
    GenStats& stats_;
    Sink& sink_;
    std::vector<int> buf_;
    int k_;
    std::vector<int> nxt_;
    std::vector<int> prv_;
};

template <class Sink>
class NaiveSuffixRunner {
public:
    NaiveSuffixRunner(const CompositionSpec& spec, GenStats& stats, Sink& sink)
        : domain_(spec.domain), stats_(stats), sink_(sink),
          buf_(static_cast<std::size_t>(spec.k)) {}

    void run(int n, int k) { descend(n, k, domain_.min_value(), true); }

private:
    bool descend(int remaining, int parts_left, int lo, bool root) {
        if (!root) ++stats_.node_expansions;
        if (parts_left == 0) {
            if (remaining == 0) {
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        bool keep_going = true;
        // x is the smallest part still to place; it lands at the back so the
        // emitted tuple is weakly decreasing.
        domain_.for_each_value(lo, remaining, [&](int x) {
            if (!keep_going) return;
            buf_[static_cast<std::size_t>(parts_left - 1)] = x;
            keep_going = descend(remaining - x, parts_left - 1, x, false);
        });
        return keep_going;
    }

    const PartDomain& domain_;
    GenStats& stats_;
    Sink& sink_;
    std::vector<int> buf_;
};

template <class Sink>
class PartitionBinomialSplitRunner {
public:
    PartitionBinomialSplitRunner(const CompositionSpec& spec, GenStats& stats, Sink& sink)
        : a_(spec.domain.min_value()), stats_(stats), sink_(sink),
          buf_(static_cast<std::size_t>(spec.k)) {}

    void run(int n, int k, int b) { descend(n, k, b, 0, true); }

private:
    bool descend(int remaining, int parts_left, int bcur, int fill_from, bool root) {
        if (!root) ++stats_.node_expansions;
        if (parts_left == 0) {
            if (remaining == 0) {
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        if (bcur == a_) {
            if (remaining == static_cast<long long>(parts_left) * a_) {
                for (int t = 0; t < parts_left; ++t)
                    buf_[static_cast<std::size_t>(fill_from + t)] = a_;
                ++stats_.emitted;
                return emit_to(sink_, buf_);
            }
            return true;
        }
        for (int i = 0; i <= parts_left; ++i) {
            const long long rest = static_cast<long long>(remaining) - static_cast<long long>(bcur) * i;
            if (rest < static_cast<long long>(parts_left - i) * a_) break;
            if (rest > static_cast<long long>(parts_left - i) * (bcur - 1)) continue;
            for (int t = 0; t < i; ++t) buf_[static_cast<std::size_t>(fill_from + t)] = bcur;
            if (!descend(static_cast<int>(rest), parts_left - i, bcur - 1, fill_from + i, false))
                return false;
        }
        return true;
    }

    int a_;
    GenStats& stats_;
    Sink& sink_;
    std::vector<int> buf_;
};

/* Output-proportional interval enumeration: emit the lexicographic minimum,
 * then repeat one in-place successor step per composition. The scan keeps
 * running suffix sums and bound accumulators so a step costs a handful of
 * integer operations on the positions it actually touches. */
template <class Sink>
void run_successor_interval(int n, int k, int a, int b, GenStats& stats, Sink& sink) {
    if (static_cast<long long>(k) * a > n || static_cast<long long>(k) * b < n) return;
    std::vector<int> parts(static_cast<std::size_t>(k));
    {
        long long cap = static_cast<long long>(k - 1) * b; // what positions after pos can absorb
        long long rem = n;
        for (int pos = 0; pos < k; ++pos) {
            const int x = (rem - cap > a) ? static_cast<int>(rem - cap) : a;
            parts[static_cast<std::size_t>(pos)] = x;
            rem -= x;
            cap -= b;
        }
    }
    // One step per composition: expansions and emissions stay equal, so a
    // single local counter is folded into the stats on every exit path.
    std::uint64_t steps = 1;
    const auto finish = [&stats, &steps] {
        stats.node_expansions += steps;
        stats.emitted += steps;
    };
    if (!emit_to(sink, parts) || k == 1) {
        finish();
        return;
    }

    int* const pp = parts.data();
    for (;;) {
        // Successors that only move the last two positions form a counted
        // run: with their sum S2 fixed, (v, S2 - v) steps v upward until
        // either v hits b or the final position drops to a.
        {
            const long long s2 = static_cast<long long>(pp[k - 2]) + pp[k - 1];
            const long long cap = s2 - a;
            int v = pp[k - 2];
            const int vhi = (b < cap) ? b : static_cast<int>(cap);
            while (++v <= vhi) {
                pp[k - 2] = v;
                pp[k - 1] = static_cast<int>(s2 - v);
                ++steps;
                if (!emit_to(sink, parts)) {
                    finish();
                    return;
                }
            }
        }
        // The run left positions k-2 and k-1 ungrowable; scan leftward for
        // the rightmost position j whose part can grow while the tail
        // stays fillable: parts[j] < b and parts[j] + 1 <= S - after*a.
        if (k == 2) {
            finish();
            return;
        }
        long long suffix = static_cast<long long>(pp[k - 1]) + pp[k - 2];
        long long amin = 2LL * a; // after * a
        long long amax = 2LL * b; // after * b
        int j = k - 3;
        for (;;) {
            const int pj = pp[j];
            suffix += pj;
            if (pj < b && pj + 1 <= suffix - amin) break;
            if (--j < 0) {
                finish();
                return;
            }
            amin += a;
            amax += b;
        }
        const long long lo = suffix - amax;
        int x = pp[j] + 1;
        if (lo > x) x = static_cast<int>(lo);
        pp[j] = x;
        long long rem = suffix - x;
        long long cap = amax - b;
        for (int pos = j + 1; pos < k; ++pos) {
            const int y = (rem - cap > a) ? static_cast<int>(rem - cap) : a;
            pp[pos] = y;
            rem -= y;
            cap -= b;
        }
        ++steps;
        if (!emit_to(sink, parts)) {
            finish();
            return;
        }
    }
}

template <class Sink>
void run_successor(const CompositionSpec& spec, GenStats& stats, Sink& sink) {
    if (spec.domain.is_interval()) {
        run_successor_interval(spec.n, spec.k, spec.domain.min_value(), spec.domain.max_value(),
                               stats, sink);
        return;
    }
    auto first = first_composition(spec);
    if (!first) return;
    std::vector<int> cur = std::move(*first);
    ++stats.node_expansions;
    ++stats.emitted;
    if (!emit_to(sink, cur)) return;
    const std::vector<int> vals = spec.domain.values();
    while (successor_step_set(cur, vals)) {
        ++stats.node_expansions;
        ++stats.emitted;
        if (!emit_to(sink, cur)) return;
    }
}

} // namespace detail

/* Streams every member of the composition set exactly once into sink, which
 * receives const Composition& valid only for the duration of the call.
 * Emission order is algorithm-specific. A sink returning bool can stop the
 * stream early by returning false. Infeasible specs yield an empty stream;
 * BinomialSplit and IntervalRecursion reject explicit-set domains. */
template <class Sink>
GenStats generate(const CompositionSpec& spec, GeneratorKind kind, Sink&& sink) {
    if ((kind == GeneratorKind::BinomialSplit || kind == GeneratorKind::IntervalRecursion) &&
        !spec.domain.is_interval()) {
        throw std::invalid_argument("generate: this generator requires an interval domain");
    }
    GenStats stats;
    const auto start = std::chrono::steady_clock::now();
    if (spec.k == 0) {
        if (spec.n == 0) {
            ++stats.emitted;
            detail::emit_to(sink, Composition{});
        }
    } else {
        switch (kind) {
        case GeneratorKind::NaiveSum: {
            detail::NaiveSumRunner<Sink> runner(spec, stats, sink);
            runner.run(spec.n);
            break;
        }
        case GeneratorKind::BinomialSplit: {
            detail::BinomialSplitRunner<Sink> runner(spec, stats, sink);
            runner.run(spec.n, spec.domain.max_value());
            break;
        }
        case GeneratorKind::IntervalRecursion: {
            detail::IntervalRecursionRunner<Sink> runner(spec, stats, sink);
            runner.run(spec.n);
            break;
        }
        case GeneratorKind::Successor:
            detail::run_successor(spec, stats, sink);
            break;
        }
    }
    if (stats.emitted > 0 && stats.node_expansions == 0) stats.node_expansions = 1;
    stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

// Streams every partition (weakly decreasing within each tuple) exactly
// once. Same sink and error conventions as generate.
template <class Sink>
GenStats generate_partitions(const CompositionSpec& spec, PartitionGeneratorKind kind, Sink&& sink) {
    if (kind == PartitionGeneratorKind::BinomialSplit && !spec.domain.is_interval())
        throw std::invalid_argument("generate_partitions: this generator requires an interval domain");
    GenStats stats;
    const auto start = std::chrono::steady_clock::now();
    if (spec.k == 0) {
        if (spec.n == 0) {
            ++stats.emitted;
            detail::emit_to(sink, Partition{});
        }
    } else {
        switch (kind) {
        case PartitionGeneratorKind::NaiveSuffix: {
            detail::NaiveSuffixRunner<Sink> runner(spec, stats, sink);
            runner.run(spec.n, spec.k);
            break;
        }
        case PartitionGeneratorKind::BinomialSplit: {
            detail::PartitionBinomialSplitRunner<Sink> runner(spec, stats, sink);
            runner.run(spec.n, spec.k, spec.domain.max_value());
            break;
        }
        }
    }
    if (stats.emitted > 0 && stats.node_expansions == 0) stats.node_expansions = 1;
    stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

} // namespace compkit
