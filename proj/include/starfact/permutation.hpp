#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "starfact/partition.hpp"

namespace starfact {

// Permutation of the 1-based ground set {1..n}, stored by its image array.
class Permutation {
public:
    explicit Permutation(int n);  // identity on {1..n}
    explicit Permutation(std::vector<int> images);  // images[i-1] = image of i

    static Permutation transposition(int a, int b, int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<size_t>(x - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Partition cycle_type() const;
    Permutation inverse() const;
    bool is_identity() const;

    // Composition x -> sigma(tau(x)); a word t1...tr evaluates left to right
    // as t1 * (t2 * (... * tr)).
    friend Permutation operator*(const Permutation& sigma, const Permutation& tau);

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Permutation& p);

private:
    std::vector<int> images_;
};

// All n! permutations of {1..n} in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int n);

}  // namespace starfact
