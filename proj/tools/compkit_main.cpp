// Command-line front end: counting, generation, verification and the
// benchmark harness. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "compkit/bench.hpp"
#include "compkit/counting.hpp"
#include "compkit/generation.hpp"
#include "compkit/transforms.hpp"
#include "compkit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainArgs {
    std::optional<int> min;
    std::optional<int> max;
    std::string set_list;
};

struct CountArgs {
    int n = 0;
    std::optional<int> k;
    std::optional<int> kmin;
    std::optional<int> kmax;
    DomainArgs domain;
    std::string objects = "compositions";
    std::string method; // defaulted from the domain form
};

struct GenArgs : CountArgs {
    std::string algo; // defaulted per object kind
    std::string format = "lines";
    std::optional<long long> limit;
};

struct VerifyArgs {
    int nmax = 12;
    int kmax = 6;
    int bmax = 5;
};

struct BenchArgs {
    std::string preset = "custom";
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> min;
    std::optional<int> max;
    std::optional<int> reps;
    std::string out_path;
};

void add_domain_options(CLI::App* cmd, DomainArgs& args) {
    cmd->add_option("--min", args.min, "interval lower bound a");
    cmd->add_option("--max", args.max, "interval upper bound b");
    cmd->add_option("--set", args.set_list, "explicit part values, comma separated");
}

compkit::PartDomain parse_domain(const DomainArgs& args) {
    if (!args.set_list.empty()) {
        if (args.min || args.max) throw UsageError("--set cannot be combined with --min/--max");
        std::vector<int> values;
        std::stringstream ss(args.set_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                values.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw UsageError("--set: '" + item + "' is not an integer");
            }
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        try {
            return compkit::PartDomain::explicit_set(std::move(values));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (!args.min || !args.max) throw UsageError("domain required: give --min and --max, or --set");
    try {
        return compkit::PartDomain::interval(*args.min, *args.max);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// (k given), (kmin,kmax given) or neither (any number of parts).
struct KSelection {
    std::optional<int> fixed;
    std::optional<compkit::KRange> range;
};

KSelection parse_k(const CountArgs& args) {
    if (args.k && (args.kmin || args.kmax))
        throw UsageError("--k cannot be combined with --kmin/--kmax");
    if (args.kmin.has_value() != args.kmax.has_value())
        throw UsageError("--kmin and --kmax must be given together");
    KSelection sel;
    if (args.k) sel.fixed = *args.k;
    if (args.kmin) sel.range = compkit::KRange{*args.kmin, *args.kmax};
    return sel;
}

std::string resolve_method(const CountArgs& args, const compkit::PartDomain& domain) {
    std::string method = args.method;
    if (method.empty()) method = domain.is_interval() ? "interval" : "set";
    if (method != "interval" && method != "binomial" && method != "set")
        throw UsageError("--method must be interval, binomial or set");
    if (!domain.is_interval() && method != "set")
        throw UsageError("--set domains only support --method set");
    return method;
}

compkit::BigInt count_partitions_by_method(int n, int k, const compkit::PartDomain& domain,
                                           const std::string& method) {
    if (method == "interval")
        return compkit::count_partitions_fixed_k(n, k, domain.min_value(), domain.max_value());
    if (method == "binomial")
        return compkit::count_partitions_binomial(n, k, domain.min_value(), domain.max_value());
    return compkit::count_partitions_set(n, k, domain);
}

compkit::BigInt count_compositions_by_method(int n, int k, const compkit::PartDomain& domain,
                                             const std::string& method) {
    if (method == "binomial")
        return compkit::count_fixed_k_binomial(n, k, domain.min_value(), domain.max_value());
    if (method == "set" && domain.is_interval())
        return compkit::count_fixed_k(n, k, compkit::PartDomain::explicit_set(domain.values()));
    return compkit::count_fixed_k(n, k, domain);
}

int run_count(const CountArgs& args) {
    const compkit::PartDomain domain = parse_domain(args.domain);
    const std::string method = resolve_method(args, domain);
    const KSelection sel = parse_k(args);
    const bool partitions = args.objects == "partitions";
    if (!partitions && args.objects != "compositions")
        throw UsageError("--objects must be compositions or partitions");

    compkit::BigInt result;
    if (sel.fixed) {
        result = partitions ? count_partitions_by_method(args.n, *sel.fixed, domain, method)
                            : count_compositions_by_method(args.n, *sel.fixed, domain, method);
    } else if (sel.range) {
        if (sel.range->k_min > sel.range->k_max) throw UsageError("--kmin must not exceed --kmax");
        result = 0;
        for (int k = sel.range->k_min; k <= sel.range->k_max; ++k)
            result += partitions ? count_partitions_by_method(args.n, k, domain, method)
                                 : count_compositions_by_method(args.n, k, domain, method);
    } else {
        // Any number of parts; diverges when 0 is an allowed part value.
        if (method == "binomial")
            throw UsageError("--method binomial requires --k or --kmin/--kmax");
        if (partitions) {
            if (domain.contains(0)) throw UsageError("partition count with any k diverges when 0 is allowed");
            if (domain.is_interval()) {
                result = compkit::count_partitions_any_k(args.n, domain.min_value(), domain.max_value());
            } else {
                result = 0;
                compkit::SetPartitionCountTable table(domain);
                for (int k = 1; k <= args.n / domain.min_value(); ++k)
                    result += table.count(args.n, k);
            }
        } else {
            try {
                result = compkit::count_any_k(args.n, domain);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }
    std::cout << result.get_str() << "\n";
    return kExitOk;
}

void print_composition(const compkit::Composition& parts, const std::string& format) {
    if (format == "jsonl") {
        std::fputc('[', stdout);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) std::fputc(',', stdout);
            std::printf("%d", parts[i]);
        }
        std::fputs("]\n", stdout);
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) std::fputc(' ', stdout);
            std::printf("%d", parts[i]);
        }
        std::fputc('\n', stdout);
    }
}

int run_gen(const GenArgs& args) {
    const compkit::PartDomain domain = parse_domain(args.domain);
    const KSelection sel = parse_k(args);
    const bool partitions = args.objects == "partitions";
    if (!partitions && args.objects != "compositions")
        throw UsageError("--objects must be compositions or partitions");
    if (args.format != "lines" && args.format != "jsonl")
        throw UsageError("--format must be lines or jsonl");
    if (!sel.fixed && !sel.range) throw UsageError("gen requires --k or --kmin/--kmax");

    long long remaining = args.limit.value_or(-1);
    auto sink = [&](const compkit::Composition& parts) -> bool {
        print_composition(parts, args.format);
        if (remaining > 0 && --remaining == 0) return false;
        return true;
    };
    if (args.limit && *args.limit <= 0) return kExitOk;

    const int k_lo = sel.fixed ? *sel.fixed : sel.range->k_min;
    const int k_hi = sel.fixed ? *sel.fixed : sel.range->k_max;
    if (k_lo > k_hi) throw UsageError("--kmin must not exceed --kmax");

    if (partitions) {
        compkit::PartitionGeneratorKind kind;
        const std::string algo = args.algo.empty() ? "binomial" : args.algo;
        if (algo == "naive") {
            kind = compkit::PartitionGeneratorKind::NaiveSuffix;
        } else if (algo == "binomial") {
            kind = compkit::PartitionGeneratorKind::BinomialSplit;
        } else {
            throw UsageError("partition generation supports --algo naive or binomial");
        }
        try {
            for (int k = k_lo; k <= k_hi && remaining != 0; ++k)
                compkit::generate_partitions(compkit::CompositionSpec(args.n, k, domain), kind, sink);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return kExitOk;
    }

    const std::string algo = args.algo.empty() ? "successor" : args.algo;
    const auto kind = compkit::kind_from_name(algo);
    if (!kind) throw UsageError("--algo must be naive, binomial, interval or successor");
    try {
        for (int k = k_lo; k <= k_hi && remaining != 0; ++k)
            compkit::generate(compkit::CompositionSpec(args.n, k, domain), *kind, sink);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return kExitOk;
}

int run_verify(const VerifyArgs& args) {
    const compkit::VerifyResult result = compkit::verify_sweep(args.nmax, args.kmax, args.bmax);
    if (result.ok) {
        std::cout << "PASS: " << result.instances << " instances, " << result.checks
                  << " checks\n";
        return kExitOk;
    }
    std::cout << "FAIL: " << result.first_failure << "\n";
    return kExitVerifyFailure;
}

int run_bench(const BenchArgs& args) {
    compkit::ExperimentConfig config;
    if (args.preset == "fig1") {
        config = compkit::ExperimentConfig::fig1();
    } else if (args.preset == "fig2") {
        config = compkit::ExperimentConfig::fig2();
    } else if (args.preset == "fig3") {
        config = compkit::ExperimentConfig::fig3();
    } else if (args.preset == "custom") {
        if (!args.n || !args.k || !args.min || !args.max)
            throw UsageError("bench --preset custom requires --n, --k, --min and --max");
        config = compkit::ExperimentConfig::custom_cell(
            *args.n, *args.k, *args.min, *args.max,
            {compkit::GeneratorKind::NaiveSum, compkit::GeneratorKind::BinomialSplit,
             compkit::GeneratorKind::IntervalRecursion, compkit::GeneratorKind::Successor},
            args.reps.value_or(10));
    } else {
        throw UsageError("--preset must be fig1, fig2, fig3 or custom");
    }
    if (args.reps) {
        if (*args.reps < 1) throw UsageError("--reps must be positive");
        config.repetitions = *args.reps;
    }

    std::vector<compkit::ExperimentRow> rows;
    try {
        rows = compkit::run_experiment(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ostringstream body;
    body << "# environment: " << compkit::environment_description() << "\n";
    compkit::write_csv(body, rows);
    if (args.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw UsageError("cannot open output file: " + args.out_path);
        out << body.str();
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting and generation of interval- or set-restricted integer "
                 "compositions and partitions"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "print the number of compositions or partitions");
    count_cmd->add_option("--n", count_args.n, "target sum")->required();
    count_cmd->add_option("--k", count_args.k, "exact number of parts");
    count_cmd->add_option("--kmin", count_args.kmin, "smallest number of parts");
    count_cmd->add_option("--kmax", count_args.kmax, "largest number of parts");
    add_domain_options(count_cmd, count_args.domain);
    count_cmd->add_option("--objects", count_args.objects, "compositions|partitions");
    count_cmd->add_option("--method", count_args.method, "interval|binomial|set");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "stream compositions or partitions to stdout");
    gen_cmd->add_option("--n", gen_args.n, "target sum")->required();
    gen_cmd->add_option("--k", gen_args.k, "exact number of parts");
    gen_cmd->add_option("--kmin", gen_args.kmin, "smallest number of parts");
    gen_cmd->add_option("--kmax", gen_args.kmax, "largest number of parts");
    add_domain_options(gen_cmd, gen_args.domain);
    gen_cmd->add_option("--objects", gen_args.objects, "compositions|partitions");
    gen_cmd->add_option("--algo", gen_args.algo, "naive|binomial|interval|successor");
    gen_cmd->add_option("--format", gen_args.format, "lines|jsonl");
    gen_cmd->add_option("--limit", gen_args.limit, "stop after this many outputs");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "cross-check generators, counts and the oracle over a sweep");
    verify_cmd->add_option("--nmax", verify_args.nmax, "largest target sum (default 12)");
    verify_cmd->add_option("--kmax", verify_args.kmax, "largest part count (default 6)");
    verify_cmd->add_option("--bmax", verify_args.bmax, "largest upper bound (default 5)");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run a timing experiment, emit CSV");
    bench_cmd->add_option("--preset", bench_args.preset, "fig1|fig2|fig3|custom");
    bench_cmd->add_option("--n", bench_args.n, "target sum (custom preset)");
    bench_cmd->add_option("--k", bench_args.k, "number of parts (custom preset)");
    bench_cmd->add_option("--min", bench_args.min, "interval lower bound (custom preset)");
    bench_cmd->add_option("--max", bench_args.max, "interval upper bound (custom preset)");
    bench_cmd->add_option("--reps", bench_args.reps, "timed repetitions per cell");
    bench_cmd->add_option("--out", bench_args.out_path, "write CSV to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (bench_cmd->parsed()) return run_bench(bench_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
