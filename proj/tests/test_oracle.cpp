#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starfact/census.hpp"
#include "starfact/group_algebra.hpp"
#include "starfact/star_formulas.hpp"
#include "starfact/verify.hpp"

using namespace starfact;

TEST_CASE("star census small cases") {
    FactorizationCensus c21 = census_star_words(2, 1);
    CHECK(c21.counts.at(Partition{2}).uniform_count() == 1);
    CHECK(c21.counts.at(Partition{1, 1}).uniform_count() == 0);
    CHECK(c21.total_transitive == 1);

    FactorizationCensus c32 = census_star_words(3, 2);
    CHECK(c32.counts.at(Partition{3}).uniform_count() == 1);
    CHECK(c32.counts.at(Partition{2, 1}).uniform_count() == 0);
    CHECK(c32.counts.at(Partition{1, 1, 1}).uniform_count() == 0);
    CHECK(c32.total_transitive == 2);

    FactorizationCensus c25 = census_star_words(2, 5);
    CHECK(c25.counts.at(Partition{2}).uniform_count() == 1);

    // Words of length 4 in S_4: class (2,1,1) is ruled out by parity.
    FactorizationCensus c44 = census_star_words(4, 4);
    CHECK(c44.counts.at(Partition{2, 1, 1}).uniform_count() == 0);
    for (const auto& [alpha, entry] : c44.counts) {
        CHECK(entry.uniform());
        CHECK(Rational(entry.uniform_count()) == star_count(alpha, 4));
    }
}

TEST_CASE("star census degenerate ground sets") {
    FactorizationCensus c10 = census_star_words(1, 0);
    CHECK(c10.counts.at(Partition{1}).uniform_count() == 1);
    CHECK(c10.total_transitive == 1);

    CHECK(census_star_words(1, 2).total_transitive == 0);
    CHECK(census_star_words(2, 0).total_transitive == 0);
}

TEST_CASE("single-permutation star counts") {
    CHECK(count_star_factorizations(Permutation::transposition(1, 2, 2), 3) == 1);
    CHECK(count_star_factorizations(Permutation(2), 2) == 1);
    CHECK(count_star_factorizations(Permutation(3), 3) == 0);
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(census_star_words(5, 20, 1000000), resource_limit_error);
    CHECK_THROWS_AS(census_hurwitz_words(4, 9, 1000000), resource_limit_error);
    CHECK_NOTHROW(census_star_words(3, 4, 16));
    CHECK_THROWS_AS(census_star_words(3, 5, 16), resource_limit_error);
}

TEST_CASE("hurwitz census small cases") {
    FactorizationCensus h20 = census_hurwitz_words(2, 0);
    CHECK(h20.counts.at(Partition{2}).uniform_count() == 1);
    CHECK(h20.counts.at(Partition{1, 1}).uniform_count() == 0);

    FactorizationCensus h21 = census_hurwitz_words(2, 1);
    CHECK(h21.counts.at(Partition{1, 1}).uniform_count() == 1);
    CHECK(h21.counts.at(Partition{2}).uniform_count() == 0);

    // 3 transpositions x 2 long cycles: all six words land in class (2,1).
    FactorizationCensus h31 = census_hurwitz_words(3, 1);
    CHECK(h31.counts.at(Partition{2, 1}).uniform_count() == 2);
    CHECK(h31.total_transitive == 6);
    CHECK(Rational(h31.counts.at(Partition{2, 1}).uniform_count()) ==
          hurwitz_number_b(Partition{2, 1}, 0));
}

TEST_CASE("hurwitz census matches b_g per class") {
    for (int n = 1; n <= 4; ++n) {
        for (long r = 0; r <= 4; ++r) {
            FactorizationCensus census = census_hurwitz_words(n, r);
            for (const auto& [alpha, entry] : census.counts) {
                CHECK(entry.uniform());
                long excess = r - (alpha.length() - 1);
                Rational expected =
                    (excess < 0 || excess % 2 != 0)
                        ? Rational(0)
                        : hurwitz_number_b(alpha, static_cast<int>(excess / 2));
                CHECK(Rational(entry.uniform_count()) == expected);
            }
        }
    }
}

TEST_CASE("cycle placement does not change class counts") {
    for (int n = 1; n <= 3; ++n)
        for (long r = 0; r <= 4; ++r) {
            FactorizationCensus last = census_hurwitz_words(n, r);
            FactorizationCensus first =
                census_hurwitz_words(n, r, kDefaultWordBudget, true);
            for (const auto& [alpha, entry] : last.counts) {
                CHECK(first.counts.at(alpha).min_count == entry.min_count);
                CHECK(first.counts.at(alpha).max_count == entry.max_count);
            }
        }
}

TEST_CASE("generic transitivity check") {
    CHECK(transitivity_check_generic({Permutation::transposition(1, 2, 2)}, 2));
    CHECK_FALSE(
        transitivity_check_generic({Permutation::transposition(1, 2, 3)}, 3));
    CHECK(transitivity_check_generic({Permutation::transposition(1, 2, 3),
                                      Permutation::transposition(2, 3, 3)},
                                     3));
    CHECK(transitivity_check_generic({}, 1));
    CHECK_FALSE(transitivity_check_generic({}, 2));
}

TEST_CASE("coverage criterion equals generic transitivity") {
    // For star words, transitivity is exactly "every star generator occurs".
    for (int n = 2; n <= 5; ++n) {
        for (long r = 1; r <= 7; ++r) {
            std::vector<long> word(static_cast<size_t>(r), 0);
            while (true) {
                unsigned coverage = 0;
                std::vector<Permutation> factors;
                for (long digit : word) {
                    coverage |= 1u << digit;
                    factors.push_back(Permutation::transposition(
                        static_cast<int>(digit) + 1, n, n));
                }
                bool covered = coverage == (1u << (n - 1)) - 1;
                CHECK(covered == transitivity_check_generic(factors, n));
                long pos = r - 1;
                while (pos >= 0 && word[static_cast<size_t>(pos)] == n - 2) {
                    word[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++word[static_cast<size_t>(pos)];
            }
        }
    }
}

TEST_CASE("pivot choice does not change the census") {
    for (int n = 1; n <= 4; ++n) {
        for (long r = 0; r <= 6; ++r) {
            FactorizationCensus with_n = census_star_words(n, r);
            FactorizationCensus with_one = census_star_words(
                n, r, kDefaultWordBudget, StarPivot::first_element);
            CHECK(with_n.total_transitive == with_one.total_transitive);
            for (const auto& [alpha, entry] : with_n.counts) {
                CHECK(with_one.counts.at(alpha).min_count == entry.min_count);
                CHECK(with_one.counts.at(alpha).max_count == entry.max_count);
            }
        }
    }
}

TEST_CASE("sharded enumeration merges to the same census") {
    for (int shards : {2, 3, 7}) {
        FactorizationCensus base = census_star_words(4, 6);
        FactorizationCensus sharded = census_star_words(
            4, 6, kDefaultWordBudget, StarPivot::last_element, shards);
        CHECK(base.total_transitive == sharded.total_transitive);
        for (const auto& [alpha, entry] : base.counts) {
            CHECK(sharded.counts.at(alpha).min_count == entry.min_count);
            CHECK(sharded.counts.at(alpha).max_count == entry.max_count);
        }
    }
}

TEST_CASE("census uniformity and formula agreement") {
    SuiteResult result = verify_star_oracle(4, 7);
    CHECK(result.passed());
}

TEST_CASE("word totals match inclusion-exclusion") {
    for (int n = 1; n <= 4; ++n)
        for (long r = 0; r <= 7; ++r)
            CHECK(census_star_words(n, r).total_transitive ==
                  transitive_star_word_total(n, r));
}

TEST_CASE("per-permutation counts match transitive-power coefficients") {
    // Stronger than per-class agreement: the inclusion-exclusion algebra
    // element and the word enumeration share the composition convention.
    for (int n = 2; n <= 4; ++n) {
        for (long r = 0; r <= 5; ++r) {
            GroupAlgebraElement power = transitive_power(n, r);
            for (const Permutation& sigma : all_permutations(n))
                CHECK(power.coefficient(sigma) ==
                      Rational(count_star_factorizations(sigma, r)));
        }
    }
}
