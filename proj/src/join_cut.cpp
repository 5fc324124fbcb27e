#include "starfact/join_cut.hpp"

namespace starfact {

Rational JoinCutCounter::count(const PivotCountKey& key) {
    return count(key.pivot_len, key.off_pivot, key.genus);
}

Rational JoinCutCounter::count(int pivot_len, const Partition& off_pivot, int genus) {
    if (pivot_len < 1) throw domain_error("pivot cycle length must be >= 1");
    if (genus < 0) throw domain_error("negative genus");
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return count_locked(pivot_len, off_pivot, genus);
}

Rational JoinCutCounter::count_locked(int i, const Partition& alpha, int g) {
    if (g < 0 || i < 1) return Rational(0);
    if (i == 1 && g == 0 && alpha.empty()) return Rational(1);

    auto key = std::make_tuple(i, g, alpha.parts());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Each term drops exactly one factor, so factor_count strictly decreases.
    Rational total = count_locked(i - 1, alpha, g);
    for (int j = 0; j < alpha.length(); ++j) {
        int part = alpha.part(j);
        total += Rational(part) * count_locked(i + part, alpha.without_index(j), g);
    }
    for (int m = 1; m <= i - 1; ++m)
        total += count_locked(i - m, alpha.with_part(m), g - 1);

    memo_.emplace(std::move(key), total);
    return total;
}

Rational star_count_series(const PivotCountKey& key) {
    const int i = key.pivot_len;
    const Partition& alpha = key.off_pivot;
    const int g = key.genus;
    if (i < 1) throw domain_error("pivot cycle length must be >= 1");
    if (g < 0) throw domain_error("negative genus");

    const int n = key.n();
    const int N = 2 * g;
    PowerSeries product = xi_series_scaled(Integer(i), N) * xi_series(N).pow(n - 2);
    for (int part : alpha.parts())
        product = product * xi_series_scaled(Integer(part), N);

    Rational scale = Rational(factorial(key.factor_count()), factorial(n));
    return scale * Rational(alpha.product_of_parts()) * Rational(i) *
           product.coeff(2 * g);
}

std::tuple<Partition, int, Rational> to_star_number(const PivotCountKey& key,
                                                    JoinCutCounter& counter) {
    Partition merged = key.off_pivot.with_part(key.pivot_len);
    Rational value = counter.count(key);
    Rational expected = star_number_a(merged, key.genus);
    if (!(value == expected))
        throw error("join-cut count " + value.str() + " disagrees with a_g(" +
                    merged.str() + ") = " + expected.str());
    return {std::move(merged), key.genus, std::move(value)};
}

std::tuple<Partition, int, Rational> to_star_number(const PivotCountKey& key) {
    JoinCutCounter counter;
    return to_star_number(key, counter);
}

}  // namespace starfact
