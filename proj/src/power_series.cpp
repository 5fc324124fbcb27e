#include "starfact/power_series.hpp"

#include <utility>

namespace starfact {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.truncation_order() != b.truncation_order())
        throw order_mismatch_error(
            "series truncation orders differ: " +
            std::to_string(a.truncation_order()) + " vs " +
            std::to_string(b.truncation_order()));
}

}  // namespace

PowerSeries::PowerSeries(int truncation_order) {
    if (truncation_order < 0)
        throw domain_error("negative truncation order");
    coeffs_.assign(static_cast<size_t>(truncation_order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("series needs at least degree 0");
}

PowerSeries PowerSeries::one(int truncation_order) {
    PowerSeries s(truncation_order);
    s.coeffs_[0] = Rational(1);
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int degree, int truncation_order) {
    PowerSeries s(truncation_order);
    if (degree < 0) throw domain_error("negative degree");
    if (degree <= truncation_order) s.coeffs_[static_cast<size_t>(degree)] = c;
    return s;
}

const Rational& PowerSeries::coeff(int d) const {
    if (d < 0 || d > truncation_order())
        throw out_of_range_error("coefficient degree " + std::to_string(d) +
                                 " outside truncation order " +
                                 std::to_string(truncation_order()));
    return coeffs_[static_cast<size_t>(d)];
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    PowerSeries r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same_order(a, b);
    const size_t n = a.coeffs_.size();
    PowerSeries r(a.truncation_order());
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::log() const {
    if (!(coeffs_[0] == Rational(1)))
        throw domain_error("log requires constant term 1");
    // From L'*a = a':  m*a_m = sum_{j=1}^{m} j*l_j*a_{m-j}, a_0 = 1.
    const int N = truncation_order();
    PowerSeries l(N);
    for (int m = 1; m <= N; ++m) {
        Rational s = Rational(m) * coeffs_[static_cast<size_t>(m)];
        for (int j = 1; j < m; ++j)
            s -= Rational(j) * l.coeffs_[static_cast<size_t>(j)] *
                 coeffs_[static_cast<size_t>(m - j)];
        l.coeffs_[static_cast<size_t>(m)] = s / Rational(m);
    }
    return l;
}

PowerSeries PowerSeries::exp() const {
    if (!coeffs_[0].is_zero())
        throw domain_error("exp requires constant term 0");
    // From E' = a'*E:  m*e_m = sum_{j=1}^{m} j*a_j*e_{m-j}, e_0 = 1.
    const int N = truncation_order();
    PowerSeries e(N);
    e.coeffs_[0] = Rational(1);
    for (int m = 1; m <= N; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j)
            s += Rational(j) * coeffs_[static_cast<size_t>(j)] *
                 e.coeffs_[static_cast<size_t>(m - j)];
        e.coeffs_[static_cast<size_t>(m)] = s / Rational(m);
    }
    return e;
}

PowerSeries PowerSeries::inverse() const {
    if (coeffs_[0].is_zero())
        throw domain_error("inverse requires nonzero constant term");
    const int N = truncation_order();
    PowerSeries b(N);
    b.coeffs_[0] = Rational(1) / coeffs_[0];
    for (int m = 1; m <= N; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j)
            s += coeffs_[static_cast<size_t>(j)] * b.coeffs_[static_cast<size_t>(m - j)];
        b.coeffs_[static_cast<size_t>(m)] = -s / coeffs_[0];
    }
    return b;
}

PowerSeries PowerSeries::pow(long k) const {
    if (k < 0) {
        if (coeffs_[0].is_zero())
            throw domain_error("negative series power with zero constant term");
        return inverse().pow(-k);
    }
    PowerSeries acc = PowerSeries::one(truncation_order());
    PowerSeries base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

PowerSeries PowerSeries::scaled_argument(const Integer& c) const {
    PowerSeries r = *this;
    Integer p = 1;
    for (size_t k = 1; k < r.coeffs_.size(); ++k) {
        p *= c;
        r.coeffs_[k] *= Rational(p);
    }
    return r;
}

}  // namespace starfact
