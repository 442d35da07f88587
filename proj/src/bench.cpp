#include "compkit/bench.hpp"

#include <sys/utsname.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace compkit {

namespace {

// Folding every stream into a global keeps the optimizer from discarding
// the enumeration work inside the timed region.
volatile std::uint64_t g_consume_guard = 0;

std::vector<int> k_values_for(const ExperimentConfig& config, int n) {
    switch (config.k_rule) {
    case ExperimentConfig::KRule::half_n: return {n / 2};
    case ExperimentConfig::KRule::fixed: return {config.k_fixed};
    case ExperimentConfig::KRule::sweep: {
        std::vector<int> ks;
        for (int k = config.k_min; k <= config.k_max; ++k) ks.push_back(k);
        return ks;
    }
    }
    return {};
}

std::vector<GeneratorKind> all_kinds() {
    return {GeneratorKind::NaiveSum, GeneratorKind::BinomialSplit, GeneratorKind::IntervalRecursion,
            GeneratorKind::Successor};
}

void validate(const ExperimentConfig& config) {
    if (config.repetitions < 1)
        throw std::invalid_argument("run_experiment: repetitions must be positive");
    if (config.warmup < 0) throw std::invalid_argument("run_experiment: warmup must be nonnegative");
    if (config.a < 0 || config.b < config.a)
        throw std::invalid_argument("run_experiment: requires 0 <= a <= b");
    if (config.algorithms.empty())
        throw std::invalid_argument("run_experiment: no algorithms selected");
}

} // namespace

ExperimentConfig ExperimentConfig::fig1() {
    ExperimentConfig c;
    c.preset = BenchPreset::fig1;
    for (int n = 10; n <= 22; n += 2) c.n_values.push_back(n);
    c.k_rule = KRule::half_n;
    c.a = 1;
    c.b = 7;
    c.algorithms = all_kinds();
    return c;
}

ExperimentConfig ExperimentConfig::fig2() {
    ExperimentConfig c;
    c.preset = BenchPreset::fig2;
    c.n_values = {22};
    c.k_rule = KRule::sweep;
    c.k_min = 2;
    c.k_max = 22;
    c.a = 1;
    c.b = 7;
    c.algorithms = all_kinds();
    return c;
}

ExperimentConfig ExperimentConfig::fig3() {
    ExperimentConfig c;
    c.preset = BenchPreset::fig3;
    c.n_values = {22};
    c.k_rule = KRule::sweep;
    c.k_min = 4;
    c.k_max = 20;
    c.a = 1;
    c.b = 7;
    c.algorithms = {GeneratorKind::IntervalRecursion, GeneratorKind::Successor};
    return c;
}

ExperimentConfig ExperimentConfig::custom_cell(int n, int k, int a, int b,
                                               std::vector<GeneratorKind> algorithms,
                                               int repetitions) {
    ExperimentConfig c;
    c.preset = BenchPreset::custom;
    c.n_values = {n};
    c.k_rule = KRule::fixed;
    c.k_fixed = k;
    c.a = a;
    c.b = b;
    c.algorithms = std::move(algorithms);
    c.repetitions = repetitions;
    return c;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
    validate(config);
    const PartDomain dom = PartDomain::interval(config.a, config.b);

    // Counts are verified against emitted totals but never timed.
    CountTable counts(dom);

    std::vector<ExperimentRow> rows;
    for (GeneratorKind kind : config.algorithms) {
        for (int n : config.n_values) {
            for (int k : k_values_for(config, n)) {
                ExperimentRow row;
                row.algorithm = kind_name(kind);
                row.n = n;
                row.k = k;
                row.a = config.a;
                row.b = config.b;
                row.count = counts.count(n, k);

                const CompositionSpec spec(n, k, dom);
                std::uint64_t digest = 0;
                auto consume = [&digest](const Composition& parts) {
                    std::uint64_t h = parts.size();
                    if (!parts.empty()) h ^= static_cast<std::uint64_t>(parts.front()) << 1;
                    digest += h;
                };

                double budget = config.cell_timeout_seconds;
                bool have_expansions = false;
                bool timed_out = false;
                std::vector<double> seconds;
                seconds.reserve(static_cast<std::size_t>(config.repetitions));

                auto one_run = [&](bool timed) {
                    const GenStats stats = generate(spec, kind, consume);
                    g_consume_guard = g_consume_guard + digest;
                    if (stats.emitted != row.count)
                        throw std::logic_error("run_experiment: emitted count diverged from table");
                    if (have_expansions && stats.node_expansions != row.node_expansions)
                        throw std::logic_error("run_experiment: node expansions not deterministic");
                    row.node_expansions = stats.node_expansions;
                    have_expansions = true;
                    if (timed) seconds.push_back(stats.elapsed_seconds);
                    budget -= stats.elapsed_seconds;
                    if (budget < 0) timed_out = true;
                };

                for (int w = 0; w < config.warmup && !timed_out; ++w) one_run(false);
                for (int r = 0; r < config.repetitions && !timed_out; ++r) one_run(true);

                if (timed_out && seconds.size() < static_cast<std::size_t>(config.repetitions)) {
                    row.timed_out = true;
                    row.seconds_mean = kTimeoutSentinel;
                    row.seconds_stddev = kTimeoutSentinel;
                } else {
                    double mean = 0.0;
                    for (double s : seconds) mean += s;
                    mean /= static_cast<double>(seconds.size());
                    double var = 0.0;
                    if (seconds.size() > 1) {
                        for (double s : seconds) var += (s - mean) * (s - mean);
                        var /= static_cast<double>(seconds.size() - 1);
                    }
                    row.seconds_mean = mean;
                    row.seconds_stddev = std::sqrt(var);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<std::pair<int, double>> summarize_ratio(const std::vector<ExperimentRow>& rows) {
    std::map<int, double> interval_means;
    std::map<int, double> successor_means;
    for (const ExperimentRow& row : rows) {
        std::map<int, double>* series = nullptr;
        if (row.algorithm == kind_name(GeneratorKind::IntervalRecursion)) series = &interval_means;
        if (row.algorithm == kind_name(GeneratorKind::Successor)) series = &successor_means;
        if (!series) continue;
        if (row.timed_out)
            throw std::invalid_argument("summarize_ratio: timed-out row for k=" + std::to_string(row.k));
        (*series)[row.k] = row.seconds_mean;
    }
    if (interval_means.empty() || successor_means.empty())
        throw std::invalid_argument("summarize_ratio: need rows for both algorithms");

    std::vector<std::pair<int, double>> out;
    for (const auto& [k, interval_mean] : interval_means) {
        auto it = successor_means.find(k);
        if (it == successor_means.end())
            throw std::invalid_argument("summarize_ratio: successor series missing k=" +
                                        std::to_string(k));
        out.emplace_back(k, interval_mean / it->second);
    }
    for (const auto& [k, unused] : successor_means) {
        (void)unused;
        if (interval_means.find(k) == interval_means.end())
            throw std::invalid_argument("summarize_ratio: interval series missing k=" +
                                        std::to_string(k));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "algorithm,n,k,a,b,count,node_expansions,seconds_mean,seconds_stddev\n";
    char buf[64];
    for (const ExperimentRow& row : rows) {
        out << row.algorithm << ',' << row.n << ',' << row.k << ',' << row.a << ',' << row.b << ','
            << row.count.get_str() << ',' << row.node_expansions;
        std::snprintf(buf, sizeof(buf), "%.6g", row.seconds_mean);
        out << ',' << buf;
        std::snprintf(buf, sizeof(buf), "%.6g", row.seconds_stddev);
        out << ',' << buf << '\n';
    }
}

std::string environment_description() {
    std::string cpu = "unknown cpu";
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        const auto pos = line.find("model name");
        if (pos != std::string::npos) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                cpu = line.substr(colon + 1);
                const auto first = cpu.find_first_not_of(' ');
                if (first != std::string::npos) cpu = cpu.substr(first);
            }
            break;
        }
    }
    utsname uts{};
    std::string os = "unknown os";
    if (uname(&uts) == 0) os = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
    return cpu + "; " + os;
}

} // namespace compkit
