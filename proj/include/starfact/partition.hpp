#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "starfact/rational.hpp"

namespace starfact {

// Integer partition in canonical weakly decreasing form.  The empty
// partition (n = 0, no parts) is valid everywhere; operations on it follow
// the empty-sum / empty-product conventions.
class Partition {
public:
    Partition() = default;  // the empty partition
    explicit Partition(std::vector<int> parts);  // any order; canonicalized
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // CLI text form: comma-separated parts ("3,2,1"); "" is the empty
    // partition.  Throws parse_error with the offending position.
    static Partition parse(const std::string& text);

    int n() const { return n_; }            // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int j) const { return parts_[static_cast<size_t>(j)]; }

    Partition with_part(int m) const;        // alpha U {m}
    Partition without_index(int j) const;    // alpha \ alpha_j
    Partition with_ones(int count) const;    // alpha U 1^count

    Integer aut_size() const;            // product of multiplicities' factorials
    Integer product_of_parts() const;

    std::string str() const;  // "3,2,1"; "" for the empty partition

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p);

private:
    std::vector<int> parts_;  // weakly decreasing, all >= 1
    int n_ = 0;
};

// All partitions of n in canonical form, no duplicates; [empty] for n = 0.
std::vector<Partition> partitions_of(int n);

// |K_alpha| = n!/(prod parts * |Aut alpha|) in S_n with n = |alpha|.
Integer class_size(const Partition& alpha);

// Number of permutations of S_n (n = i + |alpha|) whose pivot element lies
// on an i-cycle and whose remaining cycle lengths are alpha:
// (n-1)!/(prod alpha_j * |Aut alpha|).
Integer pivot_class_size(int i, const Partition& alpha);

Integer power_sum(const Partition& alpha, int i);  // p_i = sum alpha_j^i
Integer q_value(const Partition& alpha, int i);    // q_i = p_i + p_1 - 2
Integer qhat_value(const Partition& alpha, int i); // q^_i = p_i - 1

}  // namespace starfact
