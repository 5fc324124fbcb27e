#pragma once

#include <vector>

#include "starfact/rational.hpp"

namespace starfact {

// Truncated univariate formal power series over Rational.  A series of
// truncation order N stores exactly the coefficients of x^0..x^N; every
// operation is exact through degree N and discards higher degrees.
// Values are immutable after construction.
class PowerSeries {
public:
    explicit PowerSeries(int truncation_order);  // the zero series
    explicit PowerSeries(std::vector<Rational> coeffs);  // order = size - 1

    static PowerSeries one(int truncation_order);
    static PowerSeries monomial(const Rational& c, int degree, int truncation_order);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of x^d; throws out_of_range_error beyond the truncation order.
    const Rational& coeff(int d) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    // Cauchy product truncated at the shared order; the operands must agree
    // on truncation order (order_mismatch_error otherwise).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    // log of a series with constant term 1, via the exact recurrence from
    // L' * a = a'.
    PowerSeries log() const;
    // exp of a series with constant term 0.
    PowerSeries exp() const;
    // a^k; k < 0 requires an invertible (nonzero) constant term.
    PowerSeries pow(long k) const;
    // Multiplicative inverse; requires nonzero constant term.
    PowerSeries inverse() const;
    // Substitution x -> c*x: coefficient of x^k picks up a factor c^k.
    PowerSeries scaled_argument(const Integer& c) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<Rational> coeffs_;  // size = truncation_order + 1
};

}  // namespace starfact
