#include "starfact/star_formulas.hpp"

namespace starfact {

PowerSeries xi_series(int truncation_order) {
    std::vector<Rational> coeffs(static_cast<size_t>(truncation_order) + 1,
                                 Rational(0));
    for (int k = 0; 2 * k <= truncation_order; ++k) {
        Integer den = int_pow(Integer(4), k) * factorial(2 * k + 1);
        coeffs[static_cast<size_t>(2 * k)] = Rational(Integer(1), den);
    }
    return PowerSeries(std::move(coeffs));
}

PowerSeries xi_series_scaled(const Integer& c, int truncation_order) {
    return xi_series(truncation_order).scaled_argument(c);
}

XiTable::XiTable(int g_max) : g_max_(g_max) {
    if (g_max < 0) throw domain_error("negative genus bound");
    PowerSeries log_xi = xi_series(2 * g_max).log();
    xi2j_.reserve(static_cast<size_t>(g_max));
    for (int j = 1; j <= g_max; ++j) xi2j_.push_back(log_xi.coeff(2 * j));
}

const Rational& XiTable::xi2(int j) const {
    if (j < 1 || j > g_max_)
        throw out_of_range_error("xi table holds j = 1.." + std::to_string(g_max_) +
                                 ", requested " + std::to_string(j));
    return xi2j_[static_cast<size_t>(j - 1)];
}

namespace {

// Shared kernel of Q_g and Qhat_g: sum over beta |- g of
// (prod_i xi_{2 beta_i}) (prod_i val(alpha, 2 beta_i)) / |Aut beta|.
template <typename QValue>
Rational genus_poly(const Partition& alpha, int g, const XiTable& table, QValue q) {
    if (g < 0) throw domain_error("negative genus");
    if (g == 0) return Rational(1);
    if (table.order() < g)
        throw out_of_range_error("xi table order " + std::to_string(table.order()) +
                                 " below genus " + std::to_string(g));
    Rational total(0);
    for (const Partition& beta : partitions_of(g)) {
        Rational term(1);
        for (int part : beta.parts()) term *= table.xi2(part) * Rational(q(alpha, 2 * part));
        total += term / Rational(beta.aut_size());
    }
    return total;
}

}  // namespace

Rational genus_poly_Q(const Partition& alpha, int g, const XiTable& table) {
    return genus_poly(alpha, g, table,
                      [](const Partition& a, int i) { return q_value(a, i); });
}

Rational genus_poly_Qhat(const Partition& alpha, int g, const XiTable& table) {
    return genus_poly(alpha, g, table,
                      [](const Partition& a, int i) { return qhat_value(a, i); });
}

Rational genus_poly_Q_series(const Partition& alpha, int g) {
    if (alpha.empty()) throw domain_error("series form needs a nonempty partition");
    if (g < 0) throw domain_error("negative genus");
    const int N = 2 * g;
    PowerSeries prod = xi_series(N).pow(alpha.n() - 2);
    for (int part : alpha.parts()) prod = prod * xi_series_scaled(Integer(part), N);
    return prod.coeff(2 * g);
}

std::vector<std::pair<Partition, Rational>> q_monomial_expansion(int g, const XiTable& table) {
    if (g < 0) throw domain_error("negative genus");
    std::vector<std::pair<Partition, Rational>> rows;
    for (const Partition& beta : partitions_of(g)) {
        Rational coeff(1);
        for (int part : beta.parts()) coeff *= table.xi2(part);
        coeff /= Rational(beta.aut_size());
        rows.emplace_back(beta, coeff);
    }
    return rows;
}

Rational star_number_a(const Partition& alpha, int g, const XiTable& table) {
    if (alpha.empty()) throw domain_error("star factorization number needs n >= 1");
    if (g < 0) throw domain_error("negative genus");
    int n = alpha.n();
    int m = alpha.length();
    Rational scale = Rational(factorial(n + m - 2 + 2 * g), factorial(n));
    return scale * Rational(alpha.product_of_parts()) * genus_poly_Q(alpha, g, table);
}

Rational star_number_a(const Partition& alpha, int g) {
    XiTable table(g);
    return star_number_a(alpha, g, table);
}

Rational star_count(const Partition& alpha, long r, const XiTable& table) {
    if (r < 0) throw domain_error("negative word length");
    long minimal = alpha.n() + alpha.length() - 2;
    long excess = r - minimal;
    if (excess < 0 || excess % 2 != 0) return Rational(0);
    return star_number_a(alpha, static_cast<int>(excess / 2), table);
}

Rational star_count(const Partition& alpha, long r) {
    long minimal = alpha.n() + alpha.length() - 2;
    int g = (r > minimal) ? static_cast<int>((r - minimal) / 2) : 0;
    XiTable table(g);
    return star_count(alpha, r, table);
}

Rational hurwitz_number_b(const Partition& alpha, int g, const XiTable& table) {
    if (alpha.empty()) throw domain_error("Hurwitz number needs n >= 1");
    if (g < 0) throw domain_error("negative genus");
    int n = alpha.n();
    int m = alpha.length();
    // n^{m-2+2g} can carry a negative exponent (m = 1, g = 0).
    Rational n_power = Rational(Integer(n)).pow(m - 2 + 2 * g);
    return Rational(factorial(m - 1 + 2 * g)) * n_power *
           Rational(alpha.product_of_parts()) * genus_poly_Qhat(alpha, g, table);
}

Rational hurwitz_number_b(const Partition& alpha, int g) {
    XiTable table(g);
    return hurwitz_number_b(alpha, g, table);
}

Rational double_hurwitz_H(const Partition& alpha, int g) {
    return hurwitz_number_b(alpha, g) / Rational(alpha.product_of_parts());
}

Rational xi_power_bracket(int n, int h) {
    if (n < 1) throw domain_error("xi power bracket needs n >= 1");
    if (h < 0) throw domain_error("negative h");
    long exponent = n - 1 + 2 * h;
    Rational sum(0);
    for (int j = 0; j <= n - 1; ++j) {
        Rational base = Rational(Integer(n - 1), Integer(2)) - Rational(j);
        // 0^0 = 1 (only reachable at n = 1, h = 0).
        Rational power = (exponent == 0) ? Rational(1) : base.pow(exponent);
        Rational term = Rational(binomial(n - 1, j)) * power;
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Rational a_from_b_padded(const Partition& alpha, int g) {
    if (alpha.empty()) throw domain_error("corollary bridge needs n >= 1");
    int n = alpha.n();
    int m = alpha.length();
    Partition widened = alpha.with_ones(n - 1);  // partition of 2n-1
    Rational scale = Rational(Integer(2 * n - 1)).pow(n + m - 3 + 2 * g) *
                     Rational(factorial(n));
    return hurwitz_number_b(widened, g) / scale;
}

Rational a_from_b_genus_sum(const Partition& alpha, int g) {
    if (alpha.empty()) throw domain_error("corollary bridge needs n >= 1");
    int n = alpha.n();
    int m = alpha.length();
    XiTable table(g);
    Rational sum(0);
    for (int h = 0; h <= g; ++h) {
        Rational b = hurwitz_number_b(alpha, g - h, table);
        Rational n_power = Rational(Integer(n)).pow(m - 2 + 2 * g - 2 * h);
        Rational choose = Rational(binomial(n + m - 2 + 2 * g, n - 1 + 2 * h));
        sum += (b / n_power) * choose * xi_power_bracket(n, h);
    }
    return sum / Rational(factorial(n));
}

}  // namespace starfact
