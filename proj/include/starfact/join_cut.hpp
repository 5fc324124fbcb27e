#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "starfact/partition.hpp"
#include "starfact/star_formulas.hpp"

namespace starfact {

// Key for the pivot-decorated counts c_g(i, alpha): the pivot element lies
// on a cycle of length i >= 1 and the remaining cycles form alpha |- n-i.
// Such a permutation uses r = n + l(alpha) - 1 + 2g star factors.
struct PivotCountKey {
    int pivot_len = 1;
    Partition off_pivot;
    int genus = 0;

    int n() const { return pivot_len + off_pivot.n(); }
    long factor_count() const {
        return n() + off_pivot.length() - 1 + 2L * genus;
    }
};

// Memoized evaluation of the join-cut recurrence
//   c_g(i,alpha) = c_g(i-1,alpha)
//                + sum_j alpha_j c_g(i+alpha_j, alpha \ alpha_j)
//                + sum_{m=1}^{i-1} c_{g-1}(i-m, alpha U m),
// with c_0(1, empty) = 1 hard-coded (the recurrence is not applied there)
// and c_g(0, .) = 0, c with g < 0 = 0.
//
// The memo table is the only mutable state; a recursive mutex serializes
// concurrent evaluations, so distinct threads may share one counter and get
// values identical to sequential evaluation.
class JoinCutCounter {
public:
    Rational count(const PivotCountKey& key);
    Rational count(int pivot_len, const Partition& off_pivot, int genus);

private:
    Rational count_locked(int pivot_len, const Partition& off_pivot, int genus);

    std::map<std::tuple<int, int, std::vector<int>>, Rational> memo_;
    std::recursive_mutex mutex_;
};

// The same count from the closed-form generating series:
//   c_g(i,alpha) = (n+k-1+2g)!/n! * alpha_1...alpha_k * i
//                  * [x^{2g}] xi(ix) xi(x)^{n-2} prod_j xi(alpha_j x).
Rational star_count_series(const PivotCountKey& key);

// Merges the pivot cycle into the partition: returns (alpha U i, g, value)
// with value = c_g(i, alpha), checked against star_number_a(alpha U i, g).
std::tuple<Partition, int, Rational> to_star_number(const PivotCountKey& key,
                                                    JoinCutCounter& counter);
std::tuple<Partition, int, Rational> to_star_number(const PivotCountKey& key);

}  // namespace starfact
