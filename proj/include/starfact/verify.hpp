#pragma once

#include <functional>
#include <string>
#include <vector>

#include "starfact/census.hpp"

namespace starfact {

struct CheckFailure {
    std::string check;
    std::string inputs;
    std::string expected;
    std::string got;
};

struct SuiteResult {
    std::string suite;
    long long checks = 0;
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }
};

SuiteResult& merge_into(SuiteResult& into, const SuiteResult& from);

// Called for every check when installed (CLI --verbose); failures are
// recorded in the SuiteResult regardless.
using CheckObserver =
    std::function<void(const std::string& check, const std::string& inputs,
                       const std::string& expected, const std::string& got,
                       bool pass)>;

// Q_0..Q_5 q-monomial coefficients against the hard-coded golden table.
SuiteResult verify_qtable(const CheckObserver& observer = {});

// star_number_a(alpha, 0) = (n+m-2)!/n! * prod(alpha) for all alpha |- n <= nmax.
SuiteResult verify_genus0(int nmax, const CheckObserver& observer = {});

// Star census vs star_count per class, census uniformity, and the
// inclusion-exclusion word total, for n <= nmax, r <= rmax.
SuiteResult verify_star_oracle(int nmax, long rmax,
                               long long budget = kDefaultWordBudget,
                               const CheckObserver& observer = {});

// transitive_power(n, r) is central and resolves to star_count per class,
// for n <= nmax, r <= rmax.
SuiteResult verify_centrality(int nmax, long rmax,
                              const CheckObserver& observer = {});

// c_dp = c_series = star_number_a(alpha U i, g) for all pivot keys with
// n <= nmax, g <= gmax, plus centrality at the recurrence level (the count
// depends only on the multiset alpha U i).
SuiteResult verify_joincut(int nmax, int gmax,
                           const CheckObserver& observer = {});

// Hurwitz-side checks: census_hurwitz_words vs hurwitz_number_b per class
// (n <= census_nmax, r <= census_rmax) and the class-algebra product
// K_{(1^{n-2} 2)}^r K_{(n)} resolved against the same numbers
// (2 <= n <= algebra_nmax, r <= algebra_rmax).
SuiteResult verify_hurwitz(int census_nmax, long census_rmax, int algebra_nmax,
                           long algebra_rmax,
                           long long budget = kDefaultWordBudget,
                           const CheckObserver& observer = {});

// Both corollary bridges agree with star_number_a for alpha |- n <= nmax,
// g <= gmax.
SuiteResult verify_corollaries(int nmax, int gmax,
                               const CheckObserver& observer = {});

// Series infrastructure: exp(log(.)) round-trips, the xi table reconstructs
// xi(x), and xi_power_bracket matches direct series powers for n <= nmax,
// h <= hmax.
SuiteResult verify_series(int nmax, int hmax,
                          const CheckObserver& observer = {});

// Global double count: sum_alpha,g a_g(alpha) |K_alpha| at word length r
// equals the inclusion-exclusion total, for n <= nmax, r <= rmax.
SuiteResult verify_global_count(int nmax, long rmax,
                                const CheckObserver& observer = {});

// Inclusion-exclusion count of transitive star words of length r in S_n:
// sum_j (-1)^j C(n-1,j) (n-1-j)^r.
Integer transitive_star_word_total(int n, long r);

}  // namespace starfact
