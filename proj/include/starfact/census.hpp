#pragma once

#include <map>

#include "starfact/partition.hpp"
#include "starfact/permutation.hpp"

namespace starfact {

inline constexpr long long kDefaultWordBudget = 100'000'000;

// Which element appears in every star factor: n (as in the YJM element X_n)
// or 1 (as in the join-cut analysis).  Class counts are identical either way.
enum class StarPivot { last_element, first_element };

struct ClassCount {
    Integer min_count;  // over all permutations in the class
    Integer max_count;

    bool uniform() const { return min_count == max_count; }
    // The common per-permutation count; only meaningful when uniform().
    const Integer& uniform_count() const { return min_count; }
};

struct FactorizationCensus {
    int n = 0;
    long r = 0;
    std::map<Partition, ClassCount> counts;  // one entry per class of S_n
    Integer total_transitive;                // words summed over all classes
};

// Enumerates all (n-1)^r words of star transpositions, keeps the transitive
// ones (every star generator appears at least once), and tallies products
// per conjugacy class.  Words are counted against `budget` before starting;
// shards > 1 splits the first factor across threads (the merged census is
// independent of the shard count).
FactorizationCensus census_star_words(int n, long r,
                                      long long budget = kDefaultWordBudget,
                                      StarPivot pivot = StarPivot::last_element,
                                      int shards = 1);

// Number of transitive star words of length r with product sigma.
Integer count_star_factorizations(const Permutation& sigma, long r,
                                  long long budget = kDefaultWordBudget,
                                  StarPivot pivot = StarPivot::last_element);

// Enumerates words of r arbitrary transpositions followed by one n-cycle
// (the cycle leads instead when cycle_first is set; class counts agree).
// Transitivity is automatic.  Budget covers C(n,2)^r * (n-1)! words.
FactorizationCensus census_hurwitz_words(int n, long r,
                                         long long budget = kDefaultWordBudget,
                                         bool cycle_first = false);

// True iff the group generated acts transitively on {1..n} (union-find over
// the generators' orbits).
bool transitivity_check_generic(const std::vector<Permutation>& generators, int n);

}  // namespace starfact
