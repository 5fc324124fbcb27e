#pragma once

#include <string>
#include <vector>

#include "starfact/census.hpp"
#include "starfact/rational.hpp"
#include "starfact/verify.hpp"

namespace starfact {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

// One q-monomial of Q_g: coefficient * prod_i q_{2 beta_i}.
struct QTableRow {
    int g = 0;
    Partition beta;
    Rational coefficient;
};

struct StarNumberRow {
    int g = 0;
    long r = 0;  // n + m - 2 + 2g
    Rational value;
};

struct HurwitzRow {
    int g = 0;
    long r = 0;  // m - 1 + 2g
    Rational b;
    Rational H;
};

std::vector<QTableRow> qtable_rows(int gmax);
std::vector<StarNumberRow> astar_rows(const Partition& alpha, int gmin, int gmax);
std::vector<HurwitzRow> bhurwitz_rows(const Partition& alpha, int gmin, int gmax);

// "q4*q2^2" for beta = (2,1,1); "1" for the empty monomial.
std::string q_monomial_name(const Partition& beta);

// Renderers emit the complete command output including the trailing
// newline.  JSON payloads are the canonical {command, params, results,
// checks} object; parsing and re-dumping them is byte-identical.
std::string render_qtable(const std::vector<QTableRow>& rows, int gmax,
                          OutputFormat format);
std::string render_astar(const Partition& alpha, const std::vector<StarNumberRow>& rows,
                         int gmax, OutputFormat format);
std::string render_bhurwitz(const Partition& alpha, const std::vector<HurwitzRow>& rows,
                            int gmax, OutputFormat format);
std::string render_census(const FactorizationCensus& census, const std::string& kind,
                          const std::string& pivot, long long budget,
                          OutputFormat format);
std::string render_verify(const std::vector<SuiteResult>& suites,
                          const std::string& suite_name, int nmax, long rmax,
                          int gmax, long long budget, OutputFormat format);

}  // namespace starfact
