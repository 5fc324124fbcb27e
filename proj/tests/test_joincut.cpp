#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "starfact/join_cut.hpp"
#include "starfact/verify.hpp"

using namespace starfact;

TEST_CASE("recurrence base and small values") {
    JoinCutCounter counter;
    CHECK(counter.count(1, Partition{}, 0) == Rational(1));
    CHECK(counter.count(2, Partition{}, 0) == Rational(1));
    CHECK(counter.count(2, Partition{}, 1) == Rational(1));
    CHECK(counter.count(1, Partition{}, 1) == Rational(0));  // X_1 has no factors
    CHECK(counter.count(2, Partition{1}, 0) == Rational(2));

    CHECK_THROWS_AS(counter.count(0, Partition{}, 0), domain_error);
    CHECK_THROWS_AS(counter.count(1, Partition{}, -1), domain_error);
}

TEST_CASE("series extraction small values") {
    CHECK(star_count_series({1, Partition{}, 0}) == Rational(1));
    CHECK(star_count_series({3, Partition{}, 0}) == Rational(1));
    CHECK(star_count_series({2, Partition{}, 1}) == Rational(1));
    CHECK(star_count_series({2, Partition{1}, 0}) == Rational(2));
}

TEST_CASE("triple-path consistency") {
    JoinCutCounter counter;
    XiTable table(3);
    for (int n = 1; n <= 7; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (const Partition& alpha : partitions_of(n - i)) {
                for (int g = 0; g <= 3; ++g) {
                    PivotCountKey key{i, alpha, g};
                    Rational dp = counter.count(key);
                    CHECK(dp == star_count_series(key));
                    CHECK(dp == star_number_a(alpha.with_part(i), g, table));
                    CHECK(dp.is_integer());
                    CHECK(dp.sign() >= 0);
                }
            }
        }
    }
}

TEST_CASE("count depends only on the multiset alpha U i") {
    JoinCutCounter counter;
    for (int n = 1; n <= 7; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (const Partition& alpha : partitions_of(n - i)) {
                for (int g = 0; g <= 3; ++g) {
                    Rational value = counter.count(i, alpha, g);
                    for (int j = 0; j < alpha.length(); ++j) {
                        Partition other = alpha.without_index(j).with_part(i);
                        CHECK(counter.count(alpha.part(j), other, g) == value);
                    }
                }
            }
        }
    }
}

TEST_CASE("merge into star number") {
    auto [alpha1, g1, v1] = to_star_number({2, Partition{1}, 0});
    CHECK(alpha1 == Partition{2, 1});
    CHECK(g1 == 0);
    CHECK(v1 == Rational(2));

    auto [alpha2, g2, v2] = to_star_number({1, Partition{}, 0});
    CHECK(alpha2 == Partition{1});
    CHECK(v2 == Rational(1));

    auto [alpha3, g3, v3] = to_star_number({2, Partition{}, 1});
    CHECK(alpha3 == Partition{2});
    CHECK(g3 == 1);
    CHECK(v3 == Rational(1));
}

TEST_CASE("global double count") {
    SuiteResult result = verify_global_count(6, 10);
    CHECK(result.passed());
    CHECK(result.checks == 6 * 11);
}

TEST_CASE("concurrent evaluations agree with sequential") {
    JoinCutCounter sequential;
    std::vector<PivotCountKey> keys;
    for (int i = 1; i <= 5; ++i)
        for (const Partition& alpha : partitions_of(6 - i))
            for (int g = 0; g <= 2; ++g) keys.push_back({i, alpha, g});
    std::vector<Rational> expected;
    for (const auto& key : keys) expected.push_back(sequential.count(key));

    JoinCutCounter shared;
    std::vector<Rational> observed(keys.size());
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (size_t k = static_cast<size_t>(w); k < keys.size(); k += 4)
                observed[k] = shared.count(keys[k]);
        });
    for (auto& t : workers) t.join();
    for (size_t k = 0; k < keys.size(); ++k) CHECK(observed[k] == expected[k]);
}
