#pragma once

#include <vector>

#include "compkit/generation.hpp"

namespace compkit {

struct ShiftedSpec {
    CompositionSpec reduced;
    int offset = 0;
};

/* Reduces an interval instance (n, k, [a,b]) to the equivalent instance
 * (n - k*a, k, [0, b-a]); adding the offset back to every part of a reduced
 * composition is a bijection onto the original set. Throws when the domain
 * is not an interval or when n < k*a (the image target would be negative). */
ShiftedSpec shift_down(const CompositionSpec& spec);

// Adds offset to every part. Preserves length, raises the sum by k*offset,
// and keeps weakly decreasing order, so it applies to partitions unchanged.
Composition shift_up(Composition parts, int offset);

struct QuadrupleInstance {
    int n = 0;
    int k = 0;
    int a = 0;
    int b = 0;
};

// Four finite sets of instance parameters; iteration visits each set in
// ascending order. Values are deduplicated at construction.
class QuadrupleSpec {
public:
    QuadrupleSpec(std::vector<int> sums, std::vector<int> part_counts,
                  std::vector<int> lower_bounds, std::vector<int> upper_bounds);

    const std::vector<int>& sums() const { return sums_; }
    const std::vector<int>& part_counts() const { return part_counts_; }
    const std::vector<int>& lower_bounds() const { return lower_bounds_; }
    const std::vector<int>& upper_bounds() const { return upper_bounds_; }

private:
    std::vector<int> sums_;
    std::vector<int> part_counts_;
    std::vector<int> lower_bounds_;
    std::vector<int> upper_bounds_;
};

/* Runs the fixed-k generator once per k in [k_min, k_max] and forwards each
 * composition to sink(k, parts). Deliberately nothing more than that loop:
 * the wrapper adds no algorithmic content, and its total output length
 * equals count_k_range. Stats are summed across the per-k runs. */
template <class Sink>
GenStats generate_k_range(int n, KRange kr, const PartDomain& domain, GeneratorKind kind,
                          Sink&& sink) {
    if (kr.k_min < 0 || kr.k_max < kr.k_min)
        throw std::invalid_argument("generate_k_range: requires 0 <= k_min <= k_max");
    GenStats total;
    for (int k = kr.k_min; k <= kr.k_max; ++k) {
        bool stopped = false;
        GenStats s = generate(CompositionSpec(n, k, domain), kind, [&](const Composition& c) {
            const bool keep_going = detail::emit_to(sink, k, c);
            if (!keep_going) stopped = true;
            return keep_going;
        });
        total.node_expansions += s.node_expansions;
        total.emitted += s.emitted;
        total.elapsed_seconds += s.elapsed_seconds;
        if (stopped) break;
    }
    return total;
}

// The four nested loops over (n, k, a, b), skipping pairs with a > b,
// delegating each instance to generate and tagging every output with its
// instance. A trivial wrapper on purpose.
template <class Sink>
GenStats generate_quadruple(const QuadrupleSpec& q, GeneratorKind kind, Sink&& sink) {
    GenStats total;
    for (int n : q.sums()) {
        for (int k : q.part_counts()) {
            for (int a : q.lower_bounds()) {
                for (int b : q.upper_bounds()) {
                    if (a > b) continue;
                    const QuadrupleInstance inst{n, k, a, b};
                    bool stopped = false;
                    GenStats s = generate(CompositionSpec(n, k, PartDomain::interval(a, b)), kind,
                                          [&](const Composition& c) {
                                              const bool keep_going = detail::emit_to(sink, inst, c);
                                              if (!keep_going) stopped = true;
                                              return keep_going;
                                          });
                    total.node_expansions += s.node_expansions;
                    total.emitted += s.emitted;
                    total.elapsed_seconds += s.elapsed_seconds;
                    if (stopped) return total;
                }
            }
        }
    }
    return total;
}

} // namespace compkit
