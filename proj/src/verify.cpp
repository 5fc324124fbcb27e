#include "starfact/verify.hpp"

#include "starfact/group_algebra.hpp"
#include "starfact/join_cut.hpp"
#include "starfact/star_formulas.hpp"

namespace starfact {

namespace {

class Checker {
public:
    Checker(std::string suite, const CheckObserver& observer)
        : observer_(observer) {
        result_.suite = std::move(suite);
    }

    void equal(const std::string& check, const std::string& inputs,
               const Rational& expected, const Rational& got) {
        record(check, inputs, expected.str(), got.str(), expected == got);
    }

    void is_true(const std::string& check, const std::string& inputs, bool got) {
        record(check, inputs, "true", got ? "true" : "false", got);
    }

    void record(const std::string& check, const std::string& inputs,
                const std::string& expected, const std::string& got, bool pass) {
        ++result_.checks;
        if (!pass) result_.failures.push_back({check, inputs, expected, got});
        if (observer_) observer_(check, inputs, expected, got, pass);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
    const CheckObserver& observer_;
};

std::string key_str(int n, long r) {
    return "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

}  // namespace

SuiteResult& merge_into(SuiteResult& into, const SuiteResult& from) {
    into.checks += from.checks;
    into.failures.insert(into.failures.end(), from.failures.begin(),
                         from.failures.end());
    return into;
}

Integer transitive_star_word_total(int n, long r) {
    Integer total = 0;
    for (int j = 0; j <= n - 1; ++j) {
        Integer term = binomial(n - 1, j) * int_pow(Integer(n - 1 - j), r);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

SuiteResult verify_qtable(const CheckObserver& observer) {
    Checker checker("qtable", observer);

    // The coefficient of the monomial q_{2 beta} in Q_g, for g = 0..5.
    struct GoldenRow {
        int g;
        Partition beta;
        long numerator;
    };
    const Integer d2(5760);
    const Integer d3 = Integer(8) * factorial(9);
    const Integer d4 = Integer(3 * 128) * factorial(10);
    const Integer d5 = Integer(3 * 256) * factorial(12);
    const std::vector<std::pair<GoldenRow, Integer>> golden = {
        {{0, Partition{}, 1}, Integer(1)},
        {{1, Partition{1}, 1}, Integer(24)},
        {{2, Partition{2}, -2}, d2},
        {{2, Partition{1, 1}, 5}, d2},
        {{3, Partition{3}, 16}, d3},
        {{3, Partition{2, 1}, -42}, d3},
        {{3, Partition{1, 1, 1}, 35}, d3},
        {{4, Partition{4}, -144}, d4},
        {{4, Partition{3, 1}, 320}, d4},
        {{4, Partition{2, 2}, 84}, d4},
        {{4, Partition{2, 1, 1}, -420}, d4},
        {{4, Partition{1, 1, 1, 1}, 175}, d4},
        {{5, Partition{5}, 768}, d5},
        {{5, Partition{4, 1}, -1584}, d5},
        {{5, Partition{3, 2}, -704}, d5},
        {{5, Partition{3, 1, 1}, 1760}, d5},
        {{5, Partition{2, 2, 1}, 924}, d5},
        {{5, Partition{2, 1, 1, 1}, -1540}, d5},
        {{5, Partition{1, 1, 1, 1, 1}, 385}, d5},
    };

    XiTable table(5);
    std::map<std::pair<int, Partition>, Rational> computed;
    for (int g = 0; g <= 5; ++g)
        for (const auto& [beta, coeff] : q_monomial_expansion(g, table))
            computed.emplace(std::make_pair(g, beta), coeff);

    checker.is_true("qtable monomial count", "g=0..5",
                    computed.size() == golden.size());
    for (const auto& [row, den] : golden) {
        Rational expected(Integer(row.numerator), den);
        auto it = computed.find(std::make_pair(row.g, row.beta));
        Rational got = (it == computed.end()) ? Rational(0) : it->second;
        checker.equal("Q_g q-monomial coefficient",
                      "g=" + std::to_string(row.g) + " beta=" + row.beta.str(),
                      expected, got);
    }
    return checker.take();
}

SuiteResult verify_genus0(int nmax, const CheckObserver& observer) {
    Checker checker("genus0", observer);
    XiTable table(0);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& alpha : partitions_of(n)) {
            Rational expected =
                Rational(factorial(n + alpha.length() - 2), factorial(n)) *
                Rational(alpha.product_of_parts());
            checker.equal("a_0 closed form", "alpha=" + alpha.str(), expected,
                          star_number_a(alpha, 0, table));
        }
    }
    return checker.take();
}

SuiteResult verify_star_oracle(int nmax, long rmax, long long budget,
                               const CheckObserver& observer) {
    Checker checker("oracle", observer);
    for (int n = 1; n <= nmax; ++n) {
        auto classes = partitions_of(n);
        for (long r = 0; r <= rmax; ++r) {
            FactorizationCensus census = census_star_words(n, r, budget);
            checker.equal("census word total", key_str(n, r),
                          Rational(transitive_star_word_total(n, r)),
                          Rational(census.total_transitive));
            for (const Partition& alpha : classes) {
                const ClassCount& entry = census.counts.at(alpha);
                checker.is_true("census uniform on class",
                                key_str(n, r) + " alpha=" + alpha.str(),
                                entry.uniform());
                checker.equal("census count = star_count",
                              key_str(n, r) + " alpha=" + alpha.str(),
                              star_count(alpha, r), Rational(entry.max_count));
            }
        }
    }
    return checker.take();
}

SuiteResult verify_centrality(int nmax, long rmax, const CheckObserver& observer) {
    Checker checker("centrality", observer);
    for (int n = 1; n <= nmax; ++n) {
        auto classes = partitions_of(n);
        for (long r = 0; r <= rmax; ++r) {
            GroupAlgebraElement power = transitive_power(n, r);
            checker.is_true("transitive power is central", key_str(n, r),
                            is_central(power));
            try {
                CentralElement resolved = resolve_classes(power);
                for (const Partition& alpha : classes)
                    checker.equal("resolved class coefficient = star_count",
                                  key_str(n, r) + " alpha=" + alpha.str(),
                                  star_count(alpha, r),
                                  resolved.coefficient(alpha));
            } catch (const centrality_error& e) {
                checker.record("resolve_classes", key_str(n, r), "central",
                               e.what(), false);
            }
        }
    }
    return checker.take();
}

SuiteResult verify_joincut(int nmax, int gmax, const CheckObserver& observer) {
    Checker checker("joincut", observer);
    JoinCutCounter counter;
    XiTable table(gmax);
    for (int n = 1; n <= nmax; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (const Partition& alpha : partitions_of(n - i)) {
                for (int g = 0; g <= gmax; ++g) {
                    PivotCountKey key{i, alpha, g};
                    std::string inputs = "i=" + std::to_string(i) + " alpha=" +
                                         alpha.str() + " g=" + std::to_string(g);
                    Rational dp = counter.count(key);
                    checker.equal("c_dp = c_series", inputs, dp,
                                  star_count_series(key));
                    checker.equal("c_dp = a_g(alpha U i)", inputs,
                                  star_number_a(alpha.with_part(i), g, table), dp);
                    // Centrality at the recurrence level: swapping the pivot
                    // cycle with any other part leaves the count unchanged.
                    for (int j = 0; j < alpha.length(); ++j) {
                        PivotCountKey swapped{alpha.part(j),
                                              alpha.without_index(j).with_part(i), g};
                        checker.equal("pivot exchange invariance",
                                      inputs + " j=" + std::to_string(j), dp,
                                      counter.count(swapped));
                    }
                }
            }
        }
    }
    return checker.take();
}

SuiteResult verify_hurwitz(int census_nmax, long census_rmax, int algebra_nmax,
                           long algebra_rmax, long long budget,
                           const CheckObserver& observer) {
    Checker checker("hurwitz", observer);

    // b_g(alpha) when r = m-1+2g for an integer g >= 0, else 0.
    auto expected_b = [](const Partition& alpha, long r) {
        long excess = r - (alpha.length() - 1);
        if (excess < 0 || excess % 2 != 0) return Rational(0);
        return hurwitz_number_b(alpha, static_cast<int>(excess / 2));
    };

    for (int n = 1; n <= census_nmax; ++n) {
        auto classes = partitions_of(n);
        for (long r = 0; r <= census_rmax; ++r) {
            FactorizationCensus census = census_hurwitz_words(n, r, budget);
            for (const Partition& alpha : classes) {
                const ClassCount& entry = census.counts.at(alpha);
                checker.is_true("hurwitz census uniform",
                                key_str(n, r) + " alpha=" + alpha.str(),
                                entry.uniform());
                checker.equal("hurwitz census = b_g",
                              key_str(n, r) + " alpha=" + alpha.str(),
                              expected_b(alpha, r), Rational(entry.max_count));
            }
        }
    }

    for (int n = 2; n <= algebra_nmax; ++n) {
        GroupAlgebraElement swap_class = class_sum(Partition{2}.with_ones(n - 2));
        GroupAlgebraElement full_cycle = class_sum(Partition{n});
        GroupAlgebraElement product = full_cycle;
        auto classes = partitions_of(n);
        for (long r = 0; r <= algebra_rmax; ++r) {
            if (r > 0) product = swap_class * product;
            try {
                CentralElement resolved = resolve_classes(product);
                for (const Partition& alpha : classes)
                    checker.equal("K_{(1^{n-2}2)}^r K_(n) coefficient = b_g",
                                  key_str(n, r) + " alpha=" + alpha.str(),
                                  expected_b(alpha, r),
                                  resolved.coefficient(alpha));
            } catch (const centrality_error& e) {
                checker.record("resolve class product", key_str(n, r), "central",
                               e.what(), false);
            }
        }
    }
    return checker.take();
}

SuiteResult verify_corollaries(int nmax, int gmax, const CheckObserver& observer) {
    Checker checker("corollaries", observer);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& alpha : partitions_of(n)) {
            for (int g = 0; g <= gmax; ++g) {
                Rational direct = star_number_a(alpha, g);
                std::string inputs =
                    "alpha=" + alpha.str() + " g=" + std::to_string(g);
                checker.equal("padded-partition bridge", inputs, direct,
                              a_from_b_padded(alpha, g));
                checker.equal("genus-sum bridge", inputs, direct,
                              a_from_b_genus_sum(alpha, g));
            }
        }
    }
    return checker.take();
}

SuiteResult verify_series(int nmax, int hmax, const CheckObserver& observer) {
    Checker checker("series", observer);

    const int order = 2 * hmax + 2;
    PowerSeries xi = xi_series(order);
    checker.is_true("exp(log(xi)) = xi", "order=" + std::to_string(order),
                    xi.log().exp() == xi);
    for (long c = 2; c <= 3; ++c) {
        PowerSeries scaled = xi_series_scaled(Integer(c), order);
        checker.is_true("exp(log(xi(cx))) = xi(cx)", "c=" + std::to_string(c),
                        scaled.log().exp() == scaled);
    }

    // The xi table reconstructs xi(x) through exp.
    int g_max = order / 2;
    XiTable table(g_max);
    PowerSeries log_sum(order);
    for (int j = 1; j <= g_max; ++j)
        log_sum = log_sum + PowerSeries::monomial(table.xi2(j), 2 * j, order);
    checker.is_true("exp(sum xi_2j x^2j) = xi", "g_max=" + std::to_string(g_max),
                    log_sum.exp() == xi);
    checker.equal("xi_2 pinned", "j=1", Rational(1, 24), table.xi2(1));

    for (int k = 0; 2 * k <= order; ++k) {
        Integer den = int_pow(Integer(4), k) * factorial(2 * k + 1);
        checker.equal("xi closed-form coefficient", "k=" + std::to_string(k),
                      Rational(Integer(1), den), xi.coeff(2 * k));
        if (2 * k + 1 <= order)
            checker.equal("xi odd coefficient", "k=" + std::to_string(k),
                          Rational(0), xi.coeff(2 * k + 1));
    }

    for (int n = 1; n <= nmax; ++n) {
        PowerSeries power = xi_series(2 * hmax).pow(n - 1);
        for (int h = 0; h <= hmax; ++h) {
            Rational bracket =
                xi_power_bracket(n, h) / Rational(factorial(n - 1 + 2 * h));
            checker.equal("xi_power_bracket vs series power",
                          "n=" + std::to_string(n) + " h=" + std::to_string(h),
                          power.coeff(2 * h), bracket);
        }
    }
    return checker.take();
}

SuiteResult verify_global_count(int nmax, long rmax, const CheckObserver& observer) {
    Checker checker("global-count", observer);
    for (int n = 1; n <= nmax; ++n) {
        auto classes = partitions_of(n);
        for (long r = 0; r <= rmax; ++r) {
            Rational by_classes(0);
            for (const Partition& alpha : classes)
                by_classes += star_count(alpha, r) * Rational(class_size(alpha));
            checker.equal("class sum = inclusion-exclusion total", key_str(n, r),
                          Rational(transitive_star_word_total(n, r)), by_classes);
        }
    }
    return checker.take();
}

}  // namespace starfact
