#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "starfact/census.hpp"
#include "starfact/report.hpp"
#include "starfact/verify.hpp"

namespace {

using namespace starfact;

struct RunConfig {
    std::string alpha_text;
    int n = 0;
    long r = 0;
    int g = -1;  // -1: emit the whole genus range
    int gmax = 3;
    int nmax = 5;
    long rmax = 9;
    std::string format = "text";
    long long budget = kDefaultWordBudget;
    std::string pivot = "n";
    std::string kind = "star";
    std::string suite = "all";
    bool verbose = false;
};

long long env_budget() {
    if (const char* value = std::getenv("STARFACT_BUDGET")) {
        try {
            long long parsed = std::stoll(value);
            if (parsed >= 1) return parsed;
        } catch (...) {
        }
        std::cerr << "warning: ignoring unusable STARFACT_BUDGET='" << value
                  << "'\n";
    }
    return kDefaultWordBudget;
}

int run_qtable(const RunConfig& cfg) {
    std::cout << render_qtable(qtable_rows(cfg.gmax), cfg.gmax,
                               parse_format(cfg.format));
    return 0;
}

int run_astar(const RunConfig& cfg) {
    Partition alpha = Partition::parse(cfg.alpha_text);
    if (alpha.empty())
        throw domain_error("astar needs a nonempty partition");
    int gmin = cfg.g >= 0 ? cfg.g : 0;
    int gmax = cfg.g >= 0 ? cfg.g : cfg.gmax;
    std::cout << render_astar(alpha, astar_rows(alpha, gmin, gmax), gmax,
                              parse_format(cfg.format));
    return 0;
}

int run_bhurwitz(const RunConfig& cfg) {
    Partition alpha = Partition::parse(cfg.alpha_text);
    if (alpha.empty())
        throw domain_error("bhurwitz needs a nonempty partition");
    int gmin = cfg.g >= 0 ? cfg.g : 0;
    int gmax = cfg.g >= 0 ? cfg.g : cfg.gmax;
    std::cout << render_bhurwitz(alpha, bhurwitz_rows(alpha, gmin, gmax), gmax,
                                 parse_format(cfg.format));
    return 0;
}

int run_census(const RunConfig& cfg) {
    FactorizationCensus census;
    if (cfg.kind == "star") {
        StarPivot pivot = cfg.pivot == "one" ? StarPivot::first_element
                                             : StarPivot::last_element;
        census = census_star_words(cfg.n, cfg.r, cfg.budget, pivot);
    } else {
        census = census_hurwitz_words(cfg.n, cfg.r, cfg.budget);
    }
    std::cout << render_census(census, cfg.kind, cfg.pivot, cfg.budget,
                               parse_format(cfg.format));
    return 0;
}

int run_verify(const RunConfig& cfg) {
    CheckObserver observer;
    if (cfg.verbose && parse_format(cfg.format) == OutputFormat::text)
        observer = [](const std::string& check, const std::string& inputs,
                      const std::string& expected, const std::string& got,
                      bool pass) {
            std::cout << (pass ? "  ok " : "  FAIL ") << check << " [" << inputs
                      << "] expected=" << expected << " got=" << got << "\n";
        };

    std::vector<SuiteResult> suites;
    if (cfg.suite == "centrality" || cfg.suite == "all")
        suites.push_back(verify_centrality(cfg.nmax, cfg.rmax, observer));
    if (cfg.suite == "oracle" || cfg.suite == "all") {
        suites.push_back(
            verify_star_oracle(cfg.nmax, cfg.rmax, cfg.budget, observer));
        suites.push_back(verify_hurwitz(std::min(cfg.nmax, 4),
                                        std::min(cfg.rmax, 5L),
                                        std::min(cfg.nmax, 5), 5, cfg.budget,
                                        observer));
    }
    if (cfg.suite == "corollaries" || cfg.suite == "all") {
        suites.push_back(verify_qtable(observer));
        suites.push_back(verify_genus0(cfg.nmax, observer));
        suites.push_back(verify_corollaries(cfg.nmax, cfg.gmax, observer));
        suites.push_back(verify_series(8, 4, observer));
    }
    if (cfg.suite == "joincut" || cfg.suite == "all") {
        suites.push_back(verify_joincut(cfg.nmax, cfg.gmax, observer));
        suites.push_back(verify_global_count(cfg.nmax, cfg.rmax, observer));
    }

    std::cout << render_verify(suites, cfg.suite, cfg.nmax, cfg.rmax, cfg.gmax,
                               cfg.budget, parse_format(cfg.format));
    for (const auto& suite : suites)
        if (!suite.passed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.budget = env_budget();

    CLI::App app{
        "starfact: star factorization numbers, genus polynomials, and double\n"
        "Hurwitz numbers over exact rationals, with brute-force and\n"
        "group-algebra cross-verification"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* qtable = app.add_subcommand(
        "qtable", "q-monomial expansion of the genus polynomials Q_g");
    qtable->add_option("--gmax", cfg.gmax, "Largest genus")->capture_default_str();

    auto* astar = app.add_subcommand(
        "astar", "Star factorization numbers a_g(alpha) for g = 0..gmax");
    astar->add_option("--alpha", cfg.alpha_text, "Cycle type, e.g. 3,2,1")
        ->required();
    astar->add_option("--gmax", cfg.gmax, "Largest genus")->capture_default_str();
    astar->add_option("--g", cfg.g, "Single genus (overrides --gmax)");

    auto* bhurwitz = app.add_subcommand(
        "bhurwitz",
        "Scaled double Hurwitz numbers b_g(alpha) and H^g_(n),alpha");
    bhurwitz->add_option("--alpha", cfg.alpha_text, "Cycle type, e.g. 3,2,1")
        ->required();
    bhurwitz->add_option("--gmax", cfg.gmax, "Largest genus")
        ->capture_default_str();
    bhurwitz->add_option("--g", cfg.g, "Single genus (overrides --gmax)");

    auto* census = app.add_subcommand(
        "census", "Brute-force factorization census per conjugacy class");
    census->add_option("--kind", cfg.kind, "star | hurwitz")
        ->check(CLI::IsMember({"star", "hurwitz"}))
        ->capture_default_str();
    census->add_option("--n", cfg.n, "Ground-set size")->required();
    census->add_option("--r", cfg.r, "Word length (star factors / transpositions)")
        ->required();
    census->add_option("--budget", cfg.budget, "Word-count budget")
        ->capture_default_str();
    census->add_option("--pivot", cfg.pivot, "Star pivot element: n | one")
        ->check(CLI::IsMember({"n", "one"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "Cross-method verification suites (exit 1 on any failure)");
    verify
        ->add_option("suite", cfg.suite,
                     "centrality | oracle | corollaries | joincut | all")
        ->check(CLI::IsMember(
            {"centrality", "oracle", "corollaries", "joincut", "all"}))
        ->capture_default_str();
    verify->add_option("--nmax", cfg.nmax, "Largest ground-set size")
        ->capture_default_str();
    verify->add_option("--rmax", cfg.rmax, "Largest word length")
        ->capture_default_str();
    verify->add_option("--gmax", cfg.gmax, "Largest genus")->capture_default_str();
    verify->add_option("--budget", cfg.budget, "Word-count budget")
        ->capture_default_str();
    verify->add_flag("--verbose", cfg.verbose, "Print every check");

    // Let trailing global flags (e.g. `qtable --format json`) reach the app.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(qtable)) return run_qtable(cfg);
        if (app.got_subcommand(astar)) return run_astar(cfg);
        if (app.got_subcommand(bhurwitz)) return run_bhurwitz(cfg);
        if (app.got_subcommand(census)) return run_census(cfg);
        if (app.got_subcommand(verify)) return run_verify(cfg);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
