#pragma once

#include <utility>
#include <vector>

#include "starfact/partition.hpp"
#include "starfact/power_series.hpp"

namespace starfact {

// xi(x) = 2 sinh(x/2) / x as a truncated series: the coefficient of x^{2k}
// is 1/(4^k (2k+1)!) and all odd coefficients vanish.
PowerSeries xi_series(int truncation_order);

// xi(c x): the x^{2k} coefficient picks up c^{2k}.
PowerSeries xi_series_scaled(const Integer& c, int truncation_order);

// Coefficients xi_{2j} of log(xi(x)) for j = 1..g_max.  The table is
// immutable once built and may be shared read-only across threads.
class XiTable {
public:
    explicit XiTable(int g_max);

    int order() const { return g_max_; }
    // xi_{2j}; requires 1 <= j <= order().
    const Rational& xi2(int j) const;

private:
    int g_max_;
    std::vector<Rational> xi2j_;  // xi2j_[j-1] holds xi_{2j}
};

// Genus polynomial Q_g(alpha) = sum over beta |- g of
// (prod_i xi_{2 beta_i}) (prod_i q_{2 beta_i}(alpha)) / |Aut beta|; Q_0 = 1.
Rational genus_poly_Q(const Partition& alpha, int g, const XiTable& table);

// Same with q^ in place of q: the genus polynomial entering b_g.
Rational genus_poly_Qhat(const Partition& alpha, int g, const XiTable& table);

// Q_g(alpha) computed by series products instead of partition sums:
// [x^{2g}] xi(x)^{n-2} * prod_l xi(alpha_l x), n = |alpha| >= 1.
Rational genus_poly_Q_series(const Partition& alpha, int g);

// The q-monomial expansion of Q_g: pairs (beta, xi_{2 beta}/|Aut beta|) for
// beta |- g, each coefficient multiplying the monomial prod_i q_{2 beta_i}.
std::vector<std::pair<Partition, Rational>> q_monomial_expansion(int g, const XiTable& table);

// Star factorization number
// a_g(alpha) = (n+m-2+2g)!/n! * alpha_1...alpha_m * Q_g(alpha).
Rational star_number_a(const Partition& alpha, int g);
Rational star_number_a(const Partition& alpha, int g, const XiTable& table);

// a_g(alpha) when r = n+m-2+2g for an integer g >= 0, else 0.
Rational star_count(const Partition& alpha, long r);
Rational star_count(const Partition& alpha, long r, const XiTable& table);

// Scaled double Hurwitz number
// b_g(alpha) = (m-1+2g)! * n^{m-2+2g} * alpha_1...alpha_m * Qhat_g(alpha).
Rational hurwitz_number_b(const Partition& alpha, int g);
Rational hurwitz_number_b(const Partition& alpha, int g, const XiTable& table);

// H^g_{(n),alpha} = b_g(alpha) / (alpha_1...alpha_m).
Rational double_hurwitz_H(const Partition& alpha, int g);

// The alternating sum
// sum_{j=0}^{n-1} C(n-1,j) (-1)^j ((n-1)/2 - j)^{n-1+2h},
// which divided by (n-1+2h)! equals [x^{2h}] xi(x)^{n-1}.
Rational xi_power_bracket(int n, int h);

// a_g(alpha) recovered from b_g(alpha U 1^{n-1}) in S_{2n-1}.
Rational a_from_b_padded(const Partition& alpha, int g);

// a_g(alpha) recovered from b_0..b_g on the same alpha via xi_power_bracket.
Rational a_from_b_genus_sum(const Partition& alpha, int g);

}  // namespace starfact
