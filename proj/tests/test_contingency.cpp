#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cuelab/contingency.hpp"
#include "oracles.hpp"

using namespace cuelab;

TEST_CASE("count_matrices pinned values") {
    CHECK(count_matrices(Partition({1, 1}), Partition({1, 1})) == 2);
    CHECK(count_matrices(Partition({2, 2}), Partition({2, 2})) == 3);
    for (int n = 1; n <= 9; ++n) CHECK(count_matrices(Partition({n}), Partition({n})) == 1);
    CHECK(count_matrices(Partition{}, Partition{}) == 1);
}

TEST_CASE("degree mismatch counts zero") {
    CHECK(count_matrices(Partition({2}), Partition({1})) == 0);
    CHECK(count_matrices(Partition({3, 1}), Partition({2, 1})) == 0);
    CHECK(count_matrices(Partition{}, Partition({1})) == 0);
}

TEST_CASE("count matches the odometer oracle on small margins") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{1, 1}, {1, 1}}, {{2, 2}, {2, 2}}, {{2}, {1, 1}},   {{2, 1}, {2, 1}},
        {{3, 1}, {2, 2}}, {{2, 1, 1}, {2, 2}}, {{3}, {1, 1, 1}},
    };
    for (const auto& [mu, nu] : cases)
        CHECK(count_matrices(Partition(mu), Partition(nu)) ==
              oracles::contingency_by_odometer(mu, nu));
}

TEST_CASE("enumerate_matrices pinned values") {
    const auto two = enumerate_matrices(Partition({1, 1}), Partition({1, 1}));
    REQUIRE(two.size() == 2);
    const std::set<MarginMatrix> got(two.begin(), two.end());
    const MarginMatrix id{2, 2, {1, 0, 0, 1}};
    const MarginMatrix swap{2, 2, {0, 1, 1, 0}};
    CHECK(got == std::set<MarginMatrix>{id, swap});

    const auto single = enumerate_matrices(Partition({2}), Partition({1, 1}));
    REQUIRE(single.size() == 1);
    CHECK(single.front() == MarginMatrix{1, 2, {1, 1}});

    CHECK(enumerate_matrices(Partition({2, 1}), Partition({2, 1})).size() == 2);
}

TEST_CASE("enumerated matrices have the stated margins, uniquely") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n)) {
                const auto all = enumerate_matrices(mu, nu);
                CHECK(Int(static_cast<long>(all.size())) == count_matrices(mu, nu));
                std::set<MarginMatrix> uniq(all.begin(), all.end());
                CHECK(uniq.size() == all.size());
                for (const MarginMatrix& m : all) {
                    CHECK(m.row_sums() == mu.parts());
                    CHECK(m.col_sums() == nu.parts());
                }
            }
}

TEST_CASE("transposition is a bijection between the two margin orders") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n)) {
                const auto ab = enumerate_matrices(mu, nu);
                auto ba = enumerate_matrices(nu, mu);
                std::set<MarginMatrix> transposed;
                for (const MarginMatrix& m : ba) transposed.insert(m.transposed());
                CHECK(std::set<MarginMatrix>(ab.begin(), ab.end()) == transposed);
                CHECK(count_matrices(mu, nu) == count_matrices(nu, mu));
            }
}

TEST_CASE("count_via_kostka pinned values") {
    CHECK(count_via_kostka(Partition({1, 1}), Partition({1, 1})) == 2);
    CHECK(count_via_kostka(Partition({2}), Partition({1, 1})) == 1);
    CHECK(count_via_kostka(Partition({5}), Partition({5})) == 1);
}

TEST_CASE("count_via_sn_average pinned values") {
    CHECK(count_via_sn_average(Partition({1, 1}), Partition({1, 1})) == 2);
    CHECK(count_via_sn_average(Partition({2}), Partition({1, 1})) == 1);
    CHECK(count_via_sn_average(Partition({3}), Partition({3})) == 1);
}

TEST_CASE("three-way agreement up to n = 6") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n)) {
                const Int direct = count_matrices(mu, nu);
                CHECK(direct == count_via_kostka(mu, nu));
                CHECK(direct == count_via_sn_average(mu, nu));
            }
}

TEST_CASE("multinomial identity") {
    CHECK(multinomial_identity_check(Partition({1, 1}), Partition({1, 1})));
    CHECK(multinomial_identity_check(Partition({2, 1}), Partition({2, 1})));
    CHECK(multinomial_identity_check(Partition({3}), Partition({1, 1, 1})));
    for (int n = 0; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n))
                CHECK(multinomial_identity_check(mu, nu));
    CHECK_THROWS_AS(multinomial_identity_check(Partition({9}), Partition({9})), bound_error);
}

TEST_CASE("node limit is enforced") {
    CHECK_THROWS_AS(count_matrices(Partition({1, 1, 1, 1}), Partition({1, 1, 1, 1}), 3),
                    bound_error);
}
