#pragma once

#include <vector>

#include "hcenter/rational.hpp"

namespace hcenter {

// An integer partition: a weakly decreasing list of positive parts. The
// empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }              // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                          // 1-based; 0 beyond length
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Canonical order: smaller size first; within a size, lexicographically
// larger part lists first, so partitions of 4 run (4), (3,1), (2,2),
// (2,1,1), (1,1,1,1).
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

Partition conjugate(const Partition& lambda);

// mu together with n - |mu| parts equal to 1; requires n >= |mu|.
Partition embed(const Partition& mu, int n);

// Contents of addable corners (xs) and removable corners (ys), both in
// increasing order. They strictly interlace, x_1 < y_1 < x_2 < ... < x_d,
// and sum(xs) = sum(ys).
struct InterlacingPair {
    std::vector<int> xs;
    std::vector<int> ys;
};
InterlacingPair interlacing_sequences(const Partition& lambda);

// Add the addable corner of content xs[i], 1-based into the sorted xs.
Partition grow(const Partition& lambda, int i);
// Remove the removable corner of content ys[i], 1-based into the sorted ys.
Partition shrink(const Partition& lambda, int i);

// Product of hook lengths H(lambda).
Integer hook_product(const Partition& lambda);

// Multiset of cell contents j - i, sorted increasing.
std::vector<int> content_multiset(const Partition& lambda);

// Partitions of exactly n, in canonical order.
std::vector<Partition> partitions_of(int n);
// Partitions of every size 0..d, in canonical order.
std::vector<Partition> partitions_up_to(int d);

std::string to_string(const Partition& lambda);  // "(4,2,1)"; "()" when empty

}  // namespace hcenter
