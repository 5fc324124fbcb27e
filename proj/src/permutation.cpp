#include "starfact/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace starfact {

Permutation::Permutation(int n) {
    if (n < 0) throw domain_error("negative ground-set size");
    images_.resize(static_cast<size_t>(n));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) ||
            seen[static_cast<size_t>(v - 1)])
            throw domain_error("image array is not a bijection of {1..n}");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::transposition(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw domain_error("invalid transposition");
    Permutation p(n);
    std::swap(p.images_[static_cast<size_t>(a - 1)],
              p.images_[static_cast<size_t>(b - 1)]);
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> visited(images_.size(), false);
    for (size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) continue;
        int len = 0;
        size_t cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            ++len;
            cur = static_cast<size_t>(images_[cur] - 1);
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw size_mismatch_error("composing permutations of different sizes");
    std::vector<int> r(tau.images_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = sigma.images_[static_cast<size_t>(tau.images_[i] - 1)];
    return Permutation(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    os << '[';
    for (int i = 0; i < p.size(); ++i) {
        if (i > 0) os << ' ';
        os << p.images()[static_cast<size_t>(i)];
    }
    return os << ']';
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace starfact
