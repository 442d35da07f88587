#include "compkit/domain.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace compkit {

PartDomain::PartDomain(bool is_interval, int a, int b, std::vector<int> values)
    : interval_(is_interval), a_(a), b_(b), values_(std::move(values)) {}

PartDomain PartDomain::interval(int a, int b) {
    if (a < 0) throw std::invalid_argument("PartDomain::interval: lower bound must be nonnegative");
    if (b < a) throw std::invalid_argument("PartDomain::interval: requires a <= b");
    return PartDomain(true, a, b, {});
}

PartDomain PartDomain::explicit_set(std::vector<int> values) {
    if (values.empty())
        throw std::invalid_argument("PartDomain::explicit_set: value set must be nonempty");
    if (values.front() < 0)
        throw std::invalid_argument("PartDomain::explicit_set: values must be nonnegative");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1])
            throw std::invalid_argument("PartDomain::explicit_set: values must be strictly increasing");
    }
    const int lo = values.front();
    const int hi = values.back();
    return PartDomain(false, lo, hi, std::move(values));
}

std::size_t PartDomain::size() const {
    return interval_ ? static_cast<std::size_t>(b_ - a_ + 1) : values_.size();
}

bool PartDomain::contains(int x) const {
    if (interval_) return a_ <= x && x <= b_;
    return std::binary_search(values_.begin(), values_.end(), x);
}

std::vector<int> PartDomain::values() const {
    if (!interval_) return values_;
    std::vector<int> out(static_cast<std::size_t>(b_ - a_ + 1));
    std::iota(out.begin(), out.end(), a_);
    return out;
}

std::string PartDomain::to_string() const {
    std::ostringstream os;
    if (interval_) {
        os << '[' << a_ << ',' << b_ << ']';
    } else {
        os << '{';
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) os << ',';
            os << values_[i];
        }
        os << '}';
    }
    return os.str();
}

CompositionSpec::CompositionSpec(int n_, int k_, PartDomain domain_)
    : n(n_), k(k_), domain(std::move(domain_)) {
    if (n < 0) throw std::invalid_argument("CompositionSpec: n must be nonnegative");
    if (k < 0) throw std::invalid_argument("CompositionSpec: k must be nonnegative");
}

bool is_feasible(const CompositionSpec& spec) {
    const long long k = spec.k;
    return k * spec.domain.min_value() <= spec.n && spec.n <= k * spec.domain.max_value();
}

bool validate_composition(const Composition& parts, const CompositionSpec& spec) {
    if (parts.size() != static_cast<std::size_t>(spec.k)) return false;
    long long sum = 0;
    for (int p : parts) {
        if (!spec.domain.contains(p)) return false;
        sum += p;
    }
    return sum == spec.n;
}

bool is_weakly_decreasing(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i - 1] < parts[i]) return false;
    }
    return true;
}

} // namespace compkit
