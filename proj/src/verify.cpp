#include "compkit/verify.hpp"

#include <algorithm>
#include <sstream>

#include "compkit/counting.hpp"
#include "compkit/generation.hpp"
#include "compkit/oracle.hpp"
#include "compkit/transforms.hpp"

namespace compkit {

namespace {

std::string tuple_to_string(const Composition& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

std::vector<Composition> collect(const CompositionSpec& spec, GeneratorKind kind) {
    std::vector<Composition> out;
    generate(spec, kind, [&](const Composition& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> collect_partitions(const CompositionSpec& spec, PartitionGeneratorKind kind) {
    std::vector<Partition> out;
    generate_partitions(spec, kind, [&](const Partition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool check_sorted_equal(const std::vector<Composition>& got,
                        const std::vector<Composition>& expected, const std::string& label,
                        std::string& diagnostic) {
    if (got == expected) return true;
    std::ostringstream os;
    os << label << ": got " << got.size() << " tuples, expected " << expected.size();
    const std::size_t limit = std::min(got.size(), expected.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (got[i] != expected[i]) {
            os << "; first difference at index " << i << ": " << tuple_to_string(got[i]) << " vs "
               << tuple_to_string(expected[i]);
            break;
        }
    }
    diagnostic = os.str();
    return false;
}

VerifyResult verify_sweep(int nmax, int kmax, int bmax) {
    VerifyResult result;
    auto fail = [&](const std::string& why) {
        result.ok = false;
        result.first_failure = why;
    };

    static constexpr GeneratorKind kKinds[] = {
        GeneratorKind::NaiveSum,
        GeneratorKind::BinomialSplit,
        GeneratorKind::IntervalRecursion,
        GeneratorKind::Successor,
    };
    static constexpr PartitionGeneratorKind kPartitionKinds[] = {
        PartitionGeneratorKind::NaiveSuffix,
        PartitionGeneratorKind::BinomialSplit,
    };

    for (int a = 0; a <= bmax; ++a) {
        for (int b = a; b <= bmax; ++b) {
            const PartDomain dom = PartDomain::interval(a, b);
            const PartDomain reduced_dom = PartDomain::interval(0, b - a);
            CountTable counts(dom);
            CountTable reduced_counts(reduced_dom);
            BinomialCountTable bin_counts(a);
            PartitionCountTable part_counts(b);
            SetPartitionCountTable set_part_counts(dom);
            PartitionBinomialCountTable part_bin_counts(a);
            for (int n = 0; n <= nmax; ++n) {
                for (int k = 0; k <= kmax; ++k) {
                    ++result.instances;
                    std::ostringstream cell;
                    cell << "n=" << n << " k=" << k << " a=" << a << " b=" << b;
                    const CompositionSpec spec(n, k, dom);

                    const auto oracle = brute_compositions(n, k, dom);
                    const BigInt& c = counts.count(n, k);
                    ++result.checks;
                    if (c != static_cast<long>(oracle.size())) {
                        fail("count mismatch at " + cell.str());
                        return result;
                    }
                    ++result.checks;
                    if (bin_counts.count(n, k, b) != c) {
                        fail("binomial count mismatch at " + cell.str());
                        return result;
                    }
                    for (GeneratorKind kind : kKinds) {
                        ++result.checks;
                        std::string diag;
                        if (!check_sorted_equal(collect(spec, kind), oracle,
                                                std::string(kind_name(kind)) + " " + cell.str(),
                                                diag)) {
                            fail(diag);
                            return result;
                        }
                    }

                    const auto part_oracle = brute_partitions(n, k, dom);
                    ++result.checks;
                    if (part_counts.count(n, k, a) != static_cast<long>(part_oracle.size())) {
                        fail("partition count mismatch at " + cell.str());
                        return result;
                    }
                    ++result.checks;
                    if (set_part_counts.count(n, k) != static_cast<long>(part_oracle.size())) {
                        fail("set partition count mismatch at " + cell.str());
                        return result;
                    }
                    ++result.checks;
                    if (part_bin_counts.count(n, k, b) != static_cast<long>(part_oracle.size())) {
                        fail("partition binomial count mismatch at " + cell.str());
                        return result;
                    }
                    for (PartitionGeneratorKind kind : kPartitionKinds) {
                        ++result.checks;
                        std::string diag;
                        if (!check_sorted_equal(collect_partitions(spec, kind), part_oracle,
                                                std::string("partition ") + partition_kind_name(kind) +
                                                    " " + cell.str(),
                                                diag)) {
                            fail(diag);
                            return result;
                        }
                    }

                    // Cardinality transport of the shift to [0, b-a].
                    if (static_cast<long long>(k) * a <= n) {
                        ++result.checks;
                        const ShiftedSpec shifted = shift_down(spec);
                        if (reduced_counts.count(shifted.reduced.n, k) != c) {
                            fail("shift transport mismatch at " + cell.str());
                            return result;
                        }
                    }
                }
            }
        }
    }
    return result;
}

} // namespace compkit
