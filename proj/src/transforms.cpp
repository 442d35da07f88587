#include "compkit/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace compkit {

ShiftedSpec shift_down(const CompositionSpec& spec) {
    if (!spec.domain.is_interval())
        throw std::invalid_argument("shift_down: requires an interval domain");
    const int a = spec.domain.min_value();
    const int b = spec.domain.max_value();
    const long long reduced_n = static_cast<long long>(spec.n) - static_cast<long long>(spec.k) * a;
    if (reduced_n < 0)
        throw std::invalid_argument("shift_down: n < k*a, the reduced target would be negative");
    return ShiftedSpec{
        CompositionSpec(static_cast<int>(reduced_n), spec.k, PartDomain::interval(0, b - a)), a};
}

Composition shift_up(Composition parts, int offset) {
    if (offset < 0) throw std::invalid_argument("shift_up: offset must be nonnegative");
    for (int& p : parts) p += offset;
    return parts;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* label) {
    if (v.empty())
        throw std::invalid_argument(std::string("QuadrupleSpec: ") + label + " must be nonempty");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.front() < 0)
        throw std::invalid_argument(std::string("QuadrupleSpec: ") + label + " must be nonnegative");
    return v;
}

} // namespace

QuadrupleSpec::QuadrupleSpec(std::vector<int> sums, std::vector<int> part_counts,
                             std::vector<int> lower_bounds, std::vector<int> upper_bounds)
    : sums_(sorted_unique(std::move(sums), "sums")),
      part_counts_(sorted_unique(std::move(part_counts), "part counts")),
      lower_bounds_(sorted_unique(std::move(lower_bounds), "lower bounds")),
      upper_bounds_(sorted_unique(std::move(upper_bounds), "upper bounds")) {}

} // namespace compkit
