#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "compkit/counting.hpp"
#include "compkit/generation.hpp"

namespace compkit {

enum class BenchPreset { fig1, fig2, fig3, custom };

/* One benchmark sweep. The presets pin the three canonical experiments:
 *   fig1: n in {10,12,...,22}, k = n/2, [1,7], all four algorithms
 *   fig2: n = 22, k = 2..22, [1,7], all four algorithms
 *   fig3: n = 22, k = 4..20, [1,7], interval recursion vs successor
 * Infeasible (n,k) cells are kept as zero-count rows. */
struct ExperimentConfig {
    enum class KRule { half_n, fixed, sweep };

    BenchPreset preset = BenchPreset::custom;
    std::vector<int> n_values;
    KRule k_rule = KRule::fixed;
    int k_fixed = 0;
    int k_min = 0;
    int k_max = 0;
    int a = 0;
    int b = 0;
    std::vector<GeneratorKind> algorithms;
    int repetitions = 10;
    int warmup = 2;
    double cell_timeout_seconds = 120.0;

    static ExperimentConfig fig1();
    static ExperimentConfig fig2();
    static ExperimentConfig fig3();
    static ExperimentConfig custom_cell(int n, int k, int a, int b,
                                        std::vector<GeneratorKind> algorithms, int repetitions);
};

// Written into seconds_mean and seconds_stddev when a cell exhausts its
// timeout budget before completing the configured repetitions.
inline constexpr double kTimeoutSentinel = -1.0;

struct ExperimentRow {
    std::string algorithm;
    int n = 0;
    int k = 0;
    int a = 0;
    int b = 0;
    BigInt count;
    std::uint64_t node_expansions = 0;
    double seconds_mean = 0.0;
    double seconds_stddev = 0.0;
    bool timed_out = false;
};

/* Runs every (algorithm, n, k) cell: the expected count is computed from a
 * memo table outside the timed region, warmup runs are discarded, then each
 * timed repetition streams the full enumeration into a consuming sink
 * (nothing is stored). Rows come back ordered by algorithm, then n, then k.
 * node_expansions is identical across repetitions by construction and is
 * verified to be. */
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// Per-k ratio mean_seconds(interval recursion) / mean_seconds(successor),
// ascending k. Throws std::invalid_argument when either series misses a k
// present in the other, or when a used row carries the timeout sentinel.
std::vector<std::pair<int, double>> summarize_ratio(const std::vector<ExperimentRow>& rows);

// Header is exactly:
//   algorithm,n,k,a,b,count,node_expansions,seconds_mean,seconds_stddev
// Counts in decimal, floating-point fields with 6 significant digits, LF
// line endings.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

// Short CPU/OS description for the CSV comment header.
std::string environment_description();

} // namespace compkit
