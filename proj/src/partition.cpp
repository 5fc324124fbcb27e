#include "starfact/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>

namespace starfact {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw domain_error("partition parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        size_t end = (comma == std::string::npos) ? text.size() : comma;
        if (end == pos) throw parse_error("empty partition part", pos);
        int value = 0;
        for (size_t i = pos; i < end; ++i) {
            char c = text[i];
            if (c < '0' || c > '9') throw parse_error("expected digit", i);
            if (value > 100000000) throw parse_error("part too large", pos);
            value = value * 10 + (c - '0');
        }
        if (value < 1) throw parse_error("partition parts must be >= 1", pos);
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw parse_error("trailing comma", comma);
    }
    return Partition(std::move(parts));
}

Partition Partition::with_part(int m) const {
    if (m < 1) throw domain_error("partition parts must be >= 1");
    Partition r = *this;
    auto it = std::lower_bound(r.parts_.begin(), r.parts_.end(), m,
                               std::greater<int>());
    r.parts_.insert(it, m);
    r.n_ += m;
    return r;
}

Partition Partition::without_index(int j) const {
    if (j < 0 || j >= length())
        throw out_of_range_error("part index out of range");
    Partition r = *this;
    r.n_ -= r.parts_[static_cast<size_t>(j)];
    r.parts_.erase(r.parts_.begin() + j);
    return r;
}

Partition Partition::with_ones(int count) const {
    if (count < 0) throw domain_error("negative count of parts");
    Partition r = *this;
    r.parts_.insert(r.parts_.end(), static_cast<size_t>(count), 1);
    r.n_ += count;
    return r;
}

Integer Partition::aut_size() const {
    Integer a = 1;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        a *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return a;
}

Integer Partition::product_of_parts() const {
    Integer p = 1;
    for (int part : parts_) p *= part;
    return p;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    // Decreasing parts, largest first.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    if (n == 0) out.assign(1, Partition());
    return out;
}

Integer class_size(const Partition& alpha) {
    return factorial(alpha.n()) / (alpha.product_of_parts() * alpha.aut_size());
}

Integer pivot_class_size(int i, const Partition& alpha) {
    if (i < 1) throw domain_error("pivot cycle length must be >= 1");
    int n = i + alpha.n();
    return factorial(n - 1) / (alpha.product_of_parts() * alpha.aut_size());
}

Integer power_sum(const Partition& alpha, int i) {
    if (i < 1) throw domain_error("power sum index must be >= 1");
    Integer s = 0;
    for (int part : alpha.parts()) s += int_pow(Integer(part), i);
    return s;
}

Integer q_value(const Partition& alpha, int i) {
    return power_sum(alpha, i) + power_sum(alpha, 1) - 2;
}

Integer qhat_value(const Partition& alpha, int i) {
    return power_sum(alpha, i) - 1;
}

}  // namespace starfact
