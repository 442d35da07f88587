#include <doctest.h>

#include "compkit/domain.hpp"
#include "compkit/oracle.hpp"

using namespace compkit;

TEST_CASE("interval domains validate their bounds") {
    CHECK_THROWS_AS(PartDomain::interval(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(PartDomain::interval(-1, 2), std::invalid_argument);
    const PartDomain d = PartDomain::interval(1, 3);
    CHECK(d.is_interval());
    CHECK(d.min_value() == 1);
    CHECK(d.max_value() == 3);
    CHECK(d.size() == 3);
    CHECK(d.values() == std::vector<int>{1, 2, 3});
    CHECK(d.contains(2));
    CHECK_FALSE(d.contains(0));
    CHECK_FALSE(d.contains(4));
}

TEST_CASE("explicit set domains validate their values") {
    CHECK_THROWS_AS(PartDomain::explicit_set({}), std::invalid_argument);
    CHECK_THROWS_AS(PartDomain::explicit_set({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PartDomain::explicit_set({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PartDomain::explicit_set({-1, 2}), std::invalid_argument);
    const PartDomain d = PartDomain::explicit_set({0, 2, 5});
    CHECK_FALSE(d.is_interval());
    CHECK(d.min_value() == 0);
    CHECK(d.max_value() == 5);
    CHECK(d.size() == 3);
    CHECK(d.contains(0));
    CHECK(d.contains(5));
    CHECK_FALSE(d.contains(1));

    int visited = 0;
    d.for_each_value(1, 5, [&](int x) {
        CHECK((x == 2 || x == 5));
        ++visited;
    });
    CHECK(visited == 2);
}

TEST_CASE("spec construction rejects negative inputs") {
    const PartDomain d = PartDomain::interval(1, 3);
    CHECK_THROWS_AS(CompositionSpec(-1, 2, d), std::invalid_argument);
    CHECK_THROWS_AS(CompositionSpec(2, -1, d), std::invalid_argument);
}

TEST_CASE("is_feasible applies the k*a <= n <= k*b bound") {
    CHECK(is_feasible(CompositionSpec(6, 5, PartDomain::interval(1, 3))));
    CHECK_FALSE(is_feasible(CompositionSpec(10, 2, PartDomain::interval(1, 3))));
    CHECK(is_feasible(CompositionSpec(0, 0, PartDomain::interval(1, 3))));
}

TEST_CASE("is_feasible is only a necessary bound for explicit sets") {
    // Bounds hold (2 <= 6 <= 8) but no pair from {1,4} sums to 6.
    const CompositionSpec spec(6, 2, PartDomain::explicit_set({1, 4}));
    CHECK(is_feasible(spec));
    CHECK(brute_compositions(6, 2, spec.domain).empty());
}

TEST_CASE("is_feasible is exact for interval domains") {
    for (int a = 0; a <= 4; ++a) {
        for (int b = a; b <= 4; ++b) {
            const PartDomain dom = PartDomain::interval(a, b);
            for (int n = 0; n <= 14; ++n) {
                for (int k = 0; k <= 6; ++k) {
                    const bool nonempty = !brute_compositions(n, k, dom).empty();
                    CHECK(is_feasible(CompositionSpec(n, k, dom)) == nonempty);
                }
            }
        }
    }
}

TEST_CASE("validate_composition checks length, sum and membership") {
    const CompositionSpec spec(6, 5, PartDomain::interval(1, 3));
    CHECK(validate_composition({2, 1, 1, 1, 1}, spec));
    CHECK_FALSE(validate_composition({3, 3}, spec));
    CHECK_FALSE(validate_composition({4, 2}, CompositionSpec(6, 2, PartDomain::interval(1, 3))));
    CHECK(validate_composition({}, CompositionSpec(0, 0, PartDomain::interval(1, 3))));
}

TEST_CASE("is_weakly_decreasing") {
    CHECK(is_weakly_decreasing({3, 2, 2, 1}));
    CHECK(is_weakly_decreasing({}));
    CHECK(is_weakly_decreasing({5}));
    CHECK_FALSE(is_weakly_decreasing({2, 3}));
}
