#include "starfact/report.hpp"

#include <json.hpp>

#include <sstream>

#include "starfact/star_formulas.hpp"

namespace starfact {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw domain_error("unknown output format '" + name + "'");
}

std::vector<QTableRow> qtable_rows(int gmax) {
    if (gmax < 0) throw domain_error("negative genus bound");
    XiTable table(gmax);
    std::vector<QTableRow> rows;
    for (int g = 0; g <= gmax; ++g)
        for (const auto& [beta, coeff] : q_monomial_expansion(g, table))
            rows.push_back({g, beta, coeff});
    return rows;
}

std::vector<StarNumberRow> astar_rows(const Partition& alpha, int gmin, int gmax) {
    if (gmin < 0 || gmax < gmin) throw domain_error("bad genus range");
    XiTable table(gmax);
    std::vector<StarNumberRow> rows;
    for (int g = gmin; g <= gmax; ++g) {
        long r = alpha.n() + alpha.length() - 2 + 2L * g;
        rows.push_back({g, r, star_number_a(alpha, g, table)});
    }
    return rows;
}

std::vector<HurwitzRow> bhurwitz_rows(const Partition& alpha, int gmin, int gmax) {
    if (gmin < 0 || gmax < gmin) throw domain_error("bad genus range");
    XiTable table(gmax);
    std::vector<HurwitzRow> rows;
    for (int g = gmin; g <= gmax; ++g) {
        long r = alpha.length() - 1 + 2L * g;
        Rational b = hurwitz_number_b(alpha, g, table);
        rows.push_back({g, r, b, b / Rational(alpha.product_of_parts())});
    }
    return rows;
}

std::string q_monomial_name(const Partition& beta) {
    if (beta.empty()) return "1";
    std::string s;
    int i = 0;
    while (i < beta.length()) {
        int j = i;
        while (j < beta.length() && beta.part(j) == beta.part(i)) ++j;
        if (!s.empty()) s += '*';
        s += "q" + std::to_string(2 * beta.part(i));
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

std::string dump(const json& payload) { return payload.dump(2) + "\n"; }

json base_object(const std::string& command, json params) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"results", json::array()},
                {"checks", json::array()}};
}

}  // namespace

std::string render_qtable(const std::vector<QTableRow>& rows, int gmax,
                          OutputFormat format) {
    if (format == OutputFormat::json) {
        json payload = base_object("qtable", {{"gmax", gmax}});
        for (const auto& row : rows)
            payload["results"].push_back({{"g", row.g},
                                          {"beta", row.beta.str()},
                                          {"monomial", q_monomial_name(row.beta)},
                                          {"coefficient", row.coefficient.str()}});
        return dump(payload);
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"g", "beta", "monomial", "coefficient"});
        for (const auto& row : rows)
            out += csv_line({std::to_string(row.g), row.beta.str(),
                             q_monomial_name(row.beta), row.coefficient.str()});
        return out;
    }
    std::ostringstream out;
    int current = -1;
    for (const auto& row : rows) {
        if (row.g != current) {
            if (current >= 0) out << "\n";
            out << "g=" << row.g << ": ";
            current = row.g;
        } else {
            out << " + ";
        }
        if (row.beta.empty())
            out << row.coefficient;
        else
            out << row.coefficient << "*" << q_monomial_name(row.beta);
    }
    out << "\n";
    return out.str();
}

std::string render_astar(const Partition& alpha, const std::vector<StarNumberRow>& rows,
                         int gmax, OutputFormat format) {
    if (format == OutputFormat::json) {
        json payload =
            base_object("astar", {{"alpha", alpha.str()}, {"gmax", gmax}});
        for (const auto& row : rows)
            payload["results"].push_back(
                {{"g", row.g}, {"r", row.r}, {"a", row.value.str()}});
        return dump(payload);
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"g", "r", "a"});
        for (const auto& row : rows)
            out += csv_line(
                {std::to_string(row.g), std::to_string(row.r), row.value.str()});
        return out;
    }
    std::ostringstream out;
    out << "alpha=" << (alpha.empty() ? "(empty)" : alpha.str())
        << " n=" << alpha.n() << " m=" << alpha.length() << "\n";
    out << "g\tr\ta_g\n";
    for (const auto& row : rows)
        out << row.g << "\t" << row.r << "\t" << row.value << "\n";
    return out.str();
}

std::string render_bhurwitz(const Partition& alpha, const std::vector<HurwitzRow>& rows,
                            int gmax, OutputFormat format) {
    if (format == OutputFormat::json) {
        json payload =
            base_object("bhurwitz", {{"alpha", alpha.str()}, {"gmax", gmax}});
        for (const auto& row : rows)
            payload["results"].push_back({{"g", row.g},
                                          {"r", row.r},
                                          {"b", row.b.str()},
                                          {"H", row.H.str()}});
        return dump(payload);
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"g", "r", "b", "H"});
        for (const auto& row : rows)
            out += csv_line({std::to_string(row.g), std::to_string(row.r),
                             row.b.str(), row.H.str()});
        return out;
    }
    std::ostringstream out;
    out << "alpha=" << (alpha.empty() ? "(empty)" : alpha.str())
        << " n=" << alpha.n() << " m=" << alpha.length() << "\n";
    out << "g\tr\tb_g\tH\n";
    for (const auto& row : rows)
        out << row.g << "\t" << row.r << "\t" << row.b << "\t" << row.H << "\n";
    return out.str();
}

std::string render_census(const FactorizationCensus& census, const std::string& kind,
                          const std::string& pivot, long long budget,
                          OutputFormat format) {
    if (format == OutputFormat::json) {
        json payload = base_object("census", {{"kind", kind},
                                              {"n", census.n},
                                              {"r", census.r},
                                              {"pivot", pivot},
                                              {"budget", budget}});
        json classes = json::array();
        for (const auto& [alpha, entry] : census.counts)
            classes.push_back({{"class", alpha.str()},
                               {"count", entry.uniform_count().get_str()},
                               {"min", entry.min_count.get_str()},
                               {"max", entry.max_count.get_str()},
                               {"uniform", entry.uniform()}});
        payload["results"] = {{"classes", std::move(classes)},
                              {"total_transitive", census.total_transitive.get_str()}};
        return dump(payload);
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"class", "count", "min", "max", "uniform"});
        for (const auto& [alpha, entry] : census.counts)
            out += csv_line({alpha.str(), entry.uniform_count().get_str(),
                             entry.min_count.get_str(), entry.max_count.get_str(),
                             entry.uniform() ? "true" : "false"});
        return out;
    }
    std::ostringstream out;
    out << "census kind=" << kind << " n=" << census.n << " r=" << census.r
        << " total_transitive=" << census.total_transitive.get_str() << "\n";
    out << "class\tcount\tmin\tmax\tuniform\n";
    for (const auto& [alpha, entry] : census.counts)
        out << alpha.str() << "\t" << entry.uniform_count().get_str() << "\t"
            << entry.min_count.get_str() << "\t" << entry.max_count.get_str()
            << "\t" << (entry.uniform() ? "yes" : "NO") << "\n";
    return out.str();
}

std::string render_verify(const std::vector<SuiteResult>& suites,
                          const std::string& suite_name, int nmax, long rmax,
                          int gmax, long long budget, OutputFormat format) {
    bool all_passed = true;
    long long total_checks = 0;
    for (const auto& suite : suites) {
        all_passed = all_passed && suite.passed();
        total_checks += suite.checks;
    }

    if (format == OutputFormat::json) {
        json payload = base_object("verify", {{"suite", suite_name},
                                              {"nmax", nmax},
                                              {"rmax", rmax},
                                              {"gmax", gmax},
                                              {"budget", budget}});
        payload["results"] = {{"passed", all_passed}, {"checks", total_checks}};
        for (const auto& suite : suites) {
            json failures = json::array();
            for (const auto& f : suite.failures)
                failures.push_back({{"check", f.check},
                                    {"inputs", f.inputs},
                                    {"expected", f.expected},
                                    {"got", f.got}});
            payload["checks"].push_back({{"suite", suite.suite},
                                         {"checks", suite.checks},
                                         {"passed", suite.passed()},
                                         {"failures", std::move(failures)}});
        }
        return dump(payload);
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"suite", "checks", "failures", "passed"});
        for (const auto& suite : suites)
            out += csv_line({suite.suite, std::to_string(suite.checks),
                             std::to_string(suite.failures.size()),
                             suite.passed() ? "true" : "false"});
        return out;
    }
    std::ostringstream out;
    for (const auto& suite : suites) {
        out << (suite.passed() ? "PASS" : "FAIL") << " " << suite.suite << ": "
            << suite.checks << " checks, " << suite.failures.size()
            << " failures\n";
        for (const auto& f : suite.failures)
            out << "  FAIL " << f.check << " [" << f.inputs << "] expected "
                << f.expected << ", got " << f.got << "\n";
    }
    out << (all_passed ? "PASS" : "FAIL") << ": " << total_checks
        << " checks across " << suites.size() << " suites\n";
    return out.str();
}

}  // namespace starfact
