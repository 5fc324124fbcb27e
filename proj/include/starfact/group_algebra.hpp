#pragma once

#include <map>
#include <optional>
#include <vector>

#include "starfact/permutation.hpp"
#include "starfact/rational.hpp"

namespace starfact {

// Sparse element of the rational group algebra of S_n: permutation -> coefficient,
// zero coefficients never stored.  Immutable in practice; all operations
// return fresh values.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n);  // the zero element

    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement basis(const Permutation& p);

    int ground_set_size() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Permutation& p) const;

    void add_term(const Permutation& p, const Rational& c);

    GroupAlgebraElement operator-() const;
    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    // Convolution product: bilinear extension of permutation composition.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Rational& c,
                                         const GroupAlgebraElement& a);

    friend bool operator==(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) = default;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

// Partial Young-Jucys-Murphy sum over a subset S of {1..n-1}:
// sum_{j in S} (j n).  The full X_n is the S = {1..n-1} case.
GroupAlgebraElement yjm_partial(const std::vector<int>& subset, int n);
GroupAlgebraElement yjm_element(int n);  // X_n; X_1 = 0

GroupAlgebraElement ga_pow(const GroupAlgebraElement& a, long r);

// Transitive power T X_n^r by inclusion-exclusion over the 2^{n-1} subsets
// of missing star generators.  n above the cap raises resource_limit_error.
GroupAlgebraElement transitive_power(int n, long r, int n_cap = 7);

// Central iff the coefficient function is constant on every conjugacy class.
bool is_central(const GroupAlgebraElement& a);

// Redundant centrality check: a commutes with every adjacent transposition
// (i i+1).  Used by tests to guard against composition-convention bugs.
bool commutes_with_adjacent_transpositions(const GroupAlgebraElement& a);

// Central element on the class basis: cycle type -> coefficient, zero
// coefficients omitted.
struct CentralElement {
    int n = 0;
    std::map<Partition, Rational> coeffs;

    Rational coefficient(const Partition& alpha) const;
};

// Carries a witness pair of same-class permutations with different
// coefficients when class resolution is attempted on a non-central element.
class centrality_error : public error {
public:
    centrality_error(Permutation a, Permutation b, std::string what)
        : error(std::move(what)), witness_(std::move(a), std::move(b)) {}

    const std::pair<Permutation, Permutation>& witness() const { return witness_; }

private:
    std::pair<Permutation, Permutation> witness_;
};

// Resolves a central element on the class basis; throws centrality_error
// (with a witness pair) when the input is not central.
CentralElement resolve_classes(const GroupAlgebraElement& a);

// Class sum K_alpha as an element of the group algebra of S_{|alpha|}.
GroupAlgebraElement class_sum(const Partition& alpha);

}  // namespace starfact
