#include "starfact/census.hpp"

#include <functional>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

namespace starfact {

namespace {

using CountMap = std::map<std::vector<int>, long long>;

Integer star_word_count(int n, long r) {
    if (n == 1) return r == 0 ? Integer(1) : Integer(0);
    return int_pow(Integer(n - 1), r);
}

void check_budget(const Integer& words, long long budget, const std::string& what) {
    if (words > Integer(static_cast<long>(budget)))
        throw resource_limit_error(what + " needs " + words.get_str() +
                                   " words, budget is " + std::to_string(budget));
}

// Star generator for digit d in 0..n-2: (d+1, n) for pivot n, (1, d+2) for
// pivot 1.  Returned as 0-based index pair.
std::pair<int, int> star_generator(int digit, int n, StarPivot pivot) {
    if (pivot == StarPivot::last_element) return {digit, n - 1};
    return {0, digit + 1};
}

// Depth-first odometer over words of star transpositions with prefix
// products maintained incrementally: appending the factor (a b) to a prefix
// product P swaps the entries of P at positions a and b.
void enumerate_star_words(int n, long r, StarPivot pivot, int shards, int shard,
                          CountMap& counts) {
    const int digits = n - 1;
    if (n == 1) {
        if (r == 0 && shard == 0) ++counts[{1}];
        return;
    }
    if (r == 0) {
        if (shard == 0 && digits == 0) ++counts[std::vector<int>{}];
        return;  // nonempty generator set can never be covered by 0 factors
    }

    std::vector<std::vector<int>> prefix(static_cast<size_t>(r) + 1);
    std::vector<unsigned> coverage(static_cast<size_t>(r) + 1, 0);
    prefix[0].resize(static_cast<size_t>(n));
    std::iota(prefix[0].begin(), prefix[0].end(), 1);
    const unsigned full = (1u << digits) - 1;

    std::function<void(long)> walk = [&](long t) {
        if (t == r) {
            if (coverage[static_cast<size_t>(r)] == full)
                ++counts[prefix[static_cast<size_t>(r)]];
            return;
        }
        for (int digit = 0; digit < digits; ++digit) {
            if (t == 0 && digit % shards != shard) continue;
            auto [a, b] = star_generator(digit, n, pivot);
            auto& next = prefix[static_cast<size_t>(t) + 1];
            next = prefix[static_cast<size_t>(t)];
            std::swap(next[static_cast<size_t>(a)], next[static_cast<size_t>(b)]);
            coverage[static_cast<size_t>(t) + 1] =
                coverage[static_cast<size_t>(t)] | (1u << digit);
            walk(t + 1);
        }
    };
    walk(0);
}

CountMap star_product_counts(int n, long r, StarPivot pivot, int shards) {
    if (shards < 1) throw domain_error("shard count must be >= 1");
    if (shards == 1) {
        CountMap counts;
        enumerate_star_words(n, r, pivot, 1, 0, counts);
        return counts;
    }
    std::vector<CountMap> partial(static_cast<size_t>(shards));
    std::vector<std::thread> threads;
    for (int s = 0; s < shards; ++s)
        threads.emplace_back([&, s] {
            enumerate_star_words(n, r, pivot, shards, s, partial[static_cast<size_t>(s)]);
        });
    for (auto& t : threads) t.join();
    CountMap merged;
    for (const auto& shard_counts : partial)
        for (const auto& [perm, c] : shard_counts) merged[perm] += c;
    return merged;
}

FactorizationCensus aggregate(int n, long r, const CountMap& counts) {
    FactorizationCensus census;
    census.n = n;
    census.r = r;
    census.total_transitive = 0;

    // min/max per class over every permutation of the class; permutations
    // never produced count as 0, detected by comparing hits to |K_alpha|.
    std::map<Partition, std::pair<ClassCount, Integer>> agg;  // count, #hit
    for (const Partition& alpha : partitions_of(n))
        agg.emplace(alpha, std::make_pair(ClassCount{0, 0}, Integer(0)));
    for (const auto& [images, c] : counts) {
        census.total_transitive += static_cast<long>(c);
        Partition type = Permutation(images).cycle_type();
        auto& [entry, hits] = agg.at(type);
        Integer value(static_cast<long>(c));
        if (hits == 0) {
            entry.min_count = value;
            entry.max_count = value;
        } else {
            if (value < entry.min_count) entry.min_count = value;
            if (value > entry.max_count) entry.max_count = value;
        }
        ++hits;
    }
    for (auto& [alpha, state] : agg) {
        auto& [entry, hits] = state;
        if (hits < class_size(alpha)) entry.min_count = 0;  // untouched member
        census.counts.emplace(alpha, entry);
    }
    return census;
}

}  // namespace

FactorizationCensus census_star_words(int n, long r, long long budget,
                                      StarPivot pivot, int shards) {
    if (n < 1) throw domain_error("ground-set size must be >= 1");
    if (r < 0) throw domain_error("negative word length");
    check_budget(star_word_count(n, r), budget,
                 "star census n=" + std::to_string(n) + " r=" + std::to_string(r));
    return aggregate(n, r, star_product_counts(n, r, pivot, shards));
}

Integer count_star_factorizations(const Permutation& sigma, long r,
                                  long long budget, StarPivot pivot) {
    int n = sigma.size();
    if (n < 1) throw domain_error("ground-set size must be >= 1");
    if (r < 0) throw domain_error("negative word length");
    check_budget(star_word_count(n, r), budget,
                 "star count n=" + std::to_string(n) + " r=" + std::to_string(r));
    CountMap counts = star_product_counts(n, r, pivot, 1);
    auto it = counts.find(sigma.images());
    return it == counts.end() ? Integer(0) : Integer(static_cast<long>(it->second));
}

FactorizationCensus census_hurwitz_words(int n, long r, long long budget,
                                         bool cycle_first) {
    if (n < 1) throw domain_error("ground-set size must be >= 1");
    if (r < 0) throw domain_error("negative word length");
    Integer words = int_pow(Integer(n) * Integer(n - 1) / 2, r) * factorial(n - 1);
    check_budget(words, budget,
                 "Hurwitz census n=" + std::to_string(n) + " r=" + std::to_string(r));

    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) transpositions.emplace_back(a, b);
    std::vector<std::vector<int>> long_cycles;
    for (const auto& p : all_permutations(n))
        if (p.cycle_type().length() == 1) long_cycles.push_back(p.images());

    CountMap counts;
    std::vector<std::vector<int>> prefix(static_cast<size_t>(r) + 1);
    prefix[0].resize(static_cast<size_t>(n));
    std::iota(prefix[0].begin(), prefix[0].end(), 1);

    std::function<void(long)> walk = [&](long t) {
        if (t == r) {
            const auto& head = prefix[static_cast<size_t>(r)];
            std::vector<int> product(static_cast<size_t>(n));
            for (const auto& rho : long_cycles) {
                if (cycle_first) {
                    // rho * (t1...tr): apply the transpositions first.
                    for (int x = 0; x < n; ++x)
                        product[static_cast<size_t>(x)] =
                            rho[static_cast<size_t>(head[static_cast<size_t>(x)] - 1)];
                } else {
                    // (t1...tr) * rho: apply the cycle first.
                    for (int x = 0; x < n; ++x)
                        product[static_cast<size_t>(x)] =
                            head[static_cast<size_t>(rho[static_cast<size_t>(x)] - 1)];
                }
                ++counts[product];
            }
            return;
        }
        for (const auto& [a, b] : transpositions) {
            auto& next = prefix[static_cast<size_t>(t) + 1];
            next = prefix[static_cast<size_t>(t)];
            std::swap(next[static_cast<size_t>(a)], next[static_cast<size_t>(b)]);
            walk(t + 1);
        }
    };
    walk(0);
    return aggregate(n, r, counts);
}

bool transitivity_check_generic(const std::vector<Permutation>& generators, int n) {
    if (n < 1) throw domain_error("ground-set size must be >= 1");
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& g : generators) {
        if (g.size() != n)
            throw size_mismatch_error("generator over a different ground set");
        for (int x = 1; x <= n; ++x) {
            int a = find(x - 1);
            int b = find(g(x) - 1);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    }
    int root = find(0);
    for (int x = 1; x < n; ++x)
        if (find(x) != root) return false;
    return true;
}

}  // namespace starfact
