// Acceptance harness: every cross-method identity the project promises, at
// the full advertised ranges, exact arithmetic throughout.  One line per
// criterion; exit status 0 only when all pass within their time limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "starfact/verify.hpp"

using namespace starfact;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<SuiteResult()> run;
};

int run_all(const std::vector<Criterion>& criteria) {
    int failures = 0;
    for (size_t idx = 0; idx < criteria.size(); ++idx) {
        const Criterion& criterion = criteria[idx];
        auto start = std::chrono::steady_clock::now();
        SuiteResult result;
        bool threw = false;
        std::string what;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();

        bool in_time = elapsed < criterion.time_limit_seconds;
        bool pass = !threw && result.passed() && in_time;
        std::printf("%s  criterion %zu (%s)  checks=%lld  failures=%zu  %.3fs (limit %.0fs)\n",
                    pass ? "PASS" : "FAIL", idx + 1, criterion.name.c_str(),
                    result.checks, result.failures.size(), elapsed,
                    criterion.time_limit_seconds);
        if (threw) std::printf("      exception: %s\n", what.c_str());
        if (!in_time && !threw) std::printf("      over time limit\n");
        size_t shown = 0;
        for (const auto& f : result.failures) {
            if (++shown > 5) {
                std::printf("      ... %zu further failures\n",
                            result.failures.size() - 5);
                break;
            }
            std::printf("      %s [%s] expected %s, got %s\n", f.check.c_str(),
                        f.inputs.c_str(), f.expected.c_str(), f.got.c_str());
        }
        if (!pass) ++failures;
    }
    return failures;
}

}  // namespace

int main() {
    const long long budget = 100000000;  // 10^8 words

    std::vector<Criterion> criteria = {
        {"Q-table golden, g = 0..5", 1.0, [] { return verify_qtable(); }},
        {"genus-0 closed form, n <= 9", 1.0, [] { return verify_genus0(9); }},
        {"star census = formula, n <= 5, r <= 9", 60.0,
         [budget] { return verify_star_oracle(5, 9, budget); }},
        {"transitive powers central + resolved, n <= 5, r <= 11", 60.0,
         [] { return verify_centrality(5, 11); }},
        {"c_dp = c_series = a_g, n <= 7, g <= 3", 30.0,
         [] { return verify_joincut(7, 3); }},
        {"Hurwitz census + class products, n <= 4/5, r <= 5", 60.0,
         [budget] { return verify_hurwitz(4, 5, 5, 5, budget); }},
        {"corollary bridges, n <= 6, g <= 3", 5.0,
         [] { return verify_corollaries(6, 3); }},
        {"series infrastructure, n <= 8, h <= 4", 1.0,
         [] { return verify_series(8, 4); }},
        {"global double count, n <= 6, r <= 10", 5.0,
         [] { return verify_global_count(6, 10); }},
    };

    int failures = run_all(criteria);
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
