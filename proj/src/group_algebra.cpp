#include "starfact/group_algebra.hpp"

#include <algorithm>

namespace starfact {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
    if (n < 1) throw domain_error("ground-set size must be >= 1");
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    GroupAlgebraElement e(n);
    e.terms_.emplace(Permutation(n), Rational(1));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p) {
    GroupAlgebraElement e(p.size());
    e.terms_.emplace(p, Rational(1));
    return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
    if (p.size() != n_)
        throw size_mismatch_error("permutation size differs from element's n");
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
    GroupAlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                              const GroupAlgebraElement& b) {
    if (a.n_ != b.n_) throw size_mismatch_error("adding elements over different n");
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                              const GroupAlgebraElement& b) {
    if (a.n_ != b.n_)
        throw size_mismatch_error("subtracting elements over different n");
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                              const GroupAlgebraElement& b) {
    if (a.n_ != b.n_)
        throw size_mismatch_error("multiplying elements over different n");
    GroupAlgebraElement r(a.n_);
    for (const auto& [p, cp] : a.terms_)
        for (const auto& [q, cq] : b.terms_) r.add_term(p * q, cp * cq);
    return r;
}

GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.ground_set_size());
    if (c.is_zero()) return r;
    for (const auto& [p, cp] : a.terms()) r.add_term(p, c * cp);
    return r;
}

GroupAlgebraElement yjm_partial(const std::vector<int>& subset, int n) {
    GroupAlgebraElement e(n);
    for (int j : subset) {
        if (j < 1 || j > n - 1)
            throw domain_error("star generator index " + std::to_string(j) +
                               " outside {1.." + std::to_string(n - 1) + "}");
        e.add_term(Permutation::transposition(j, n, n), Rational(1));
    }
    return e;
}

GroupAlgebraElement yjm_element(int n) {
    std::vector<int> all;
    for (int j = 1; j <= n - 1; ++j) all.push_back(j);
    return yjm_partial(all, n);
}

GroupAlgebraElement ga_pow(const GroupAlgebraElement& a, long r) {
    if (r < 0) throw domain_error("negative group-algebra power");
    GroupAlgebraElement acc = GroupAlgebraElement::identity(a.ground_set_size());
    for (long step = 0; step < r; ++step) acc = acc * a;
    return acc;
}

GroupAlgebraElement transitive_power(int n, long r, int n_cap) {
    if (n < 1) throw domain_error("ground-set size must be >= 1");
    if (r < 0) throw domain_error("negative word length");
    if (n > n_cap)
        throw resource_limit_error("transitive power over S_" + std::to_string(n) +
                                   " exceeds cap n <= " + std::to_string(n_cap));
    GroupAlgebraElement total(n);
    const int generators = n - 1;
    for (unsigned long mask = 0; mask < (1UL << generators); ++mask) {
        // mask selects the kept generators (the complement of the excluded
        // set gamma); sign is (-1)^{|gamma|}.
        std::vector<int> kept;
        for (int j = 0; j < generators; ++j)
            if (mask & (1UL << j)) kept.push_back(j + 1);
        int excluded = generators - static_cast<int>(kept.size());
        GroupAlgebraElement contribution = ga_pow(yjm_partial(kept, n), r);
        total = (excluded % 2 == 0) ? total + contribution : total - contribution;
    }
    return total;
}

bool is_central(const GroupAlgebraElement& a) {
    // Coefficients must be constant on each class; absent terms count as 0.
    std::map<Partition, std::pair<Rational, Integer>> seen;  // value, #perms seen
    for (const auto& [p, c] : a.terms()) {
        Partition type = p.cycle_type();
        auto [it, inserted] = seen.emplace(type, std::make_pair(c, Integer(1)));
        if (!inserted) {
            if (!(it->second.first == c)) return false;
            ++it->second.second;
        }
    }
    for (const auto& [type, entry] : seen)
        if (entry.second != class_size(type)) return false;  // some member is 0
    return true;
}

bool commutes_with_adjacent_transpositions(const GroupAlgebraElement& a) {
    int n = a.ground_set_size();
    for (int i = 1; i <= n - 1; ++i) {
        GroupAlgebraElement s =
            GroupAlgebraElement::basis(Permutation::transposition(i, i + 1, n));
        if (!(a * s == s * a)) return false;
    }
    return true;
}

Rational CentralElement::coefficient(const Partition& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? Rational(0) : it->second;
}

CentralElement resolve_classes(const GroupAlgebraElement& a) {
    struct ClassState {
        Permutation first;
        Rational value;
        Integer members;
    };
    std::map<Partition, ClassState> seen;
    for (const auto& [p, c] : a.terms()) {
        Partition type = p.cycle_type();
        auto it = seen.find(type);
        if (it == seen.end()) {
            seen.emplace(type, ClassState{p, c, Integer(1)});
        } else {
            if (!(it->second.value == c))
                throw centrality_error(it->second.first, p,
                                       "class " + type.str() +
                                           " carries coefficients " +
                                           it->second.value.str() + " and " +
                                           c.str());
            ++it->second.members;
        }
    }
    CentralElement central;
    central.n = a.ground_set_size();
    for (auto& [type, state] : seen) {
        if (state.members != class_size(type)) {
            // Some member of the class is absent, i.e. has coefficient 0.
            for (const auto& p : all_permutations(central.n)) {
                if (p.cycle_type() == type && a.coefficient(p).is_zero())
                    throw centrality_error(
                        state.first, p,
                        "class " + type.str() + " carries coefficients " +
                            state.value.str() + " and 0");
            }
        }
        central.coeffs.emplace(type, state.value);
    }
    return central;
}

GroupAlgebraElement class_sum(const Partition& alpha) {
    int n = alpha.n();
    if (n < 1) throw domain_error("class sum needs n >= 1");
    GroupAlgebraElement e(n);
    for (const auto& p : all_permutations(n))
        if (p.cycle_type() == alpha) e.add_term(p, Rational(1));
    return e;
}

}  // namespace starfact
