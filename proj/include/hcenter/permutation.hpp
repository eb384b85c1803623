#pragma once

#include <utility>
#include <vector>

#include "hcenter/partition.hpp"

namespace hcenter {

// A permutation of {1..n}, stored as the image list. Degree 0 is the unique
// element of S_0.
class Permutation {
public:
    Permutation() = default;                  // degree 0
    explicit Permutation(int n);              // identity in S_n
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int n, int a, int b);
    static Permutation adjacent(int n, int i);  // s_i = (i, i+1), 1 <= i < n

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const;              // image of x, 1-based

    // (a * b)(x) = a(b(x)); degrees must match.
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;

    // Natural embedding into S_m, m >= degree; new points are fixed.
    Permutation promote(int m) const;
    // Restriction to {1..k}; requires that k+1..degree are fixed.
    Permutation restrict_to(int k) const;
    // True when every point above k is fixed.
    bool fixes_above(int k) const;
    bool is_identity() const;

    Partition cycle_type() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return img_ < o.img_;
    }

    const std::vector<int>& images() const { return img_; }

private:
    std::vector<int> img_;
};

// Longest element w_0 of S_n, i -> n+1-i.
Permutation longest_element(int n);

// t_mu in S_{|mu|}: one descending cycle per part, on consecutive blocks
// from the left; its cycle type is mu.
Permutation t_mu(const Partition& mu);

// w_0-conjugate of the natural embedding of t_mu into S_n; acts on the top
// |mu| letters, e.g. t_{(k),n} = s_{n-k+1} ... s_{n-1}.
Permutation t_mu_n(const Partition& mu, int n);

// t_{(i),m} = s_{m-i+1} ... s_{m-1}, the minimal-length coset representative
// sending m to m-i+1; t_single(1, m) = id.
Permutation t_single(int i, int m);

// Lambda_{n,k}: products t_{(i_n),n} t_{(i_{n-1}),n-1} ... t_{(i_{k+1}),k+1}
// with 1 <= i_j <= j, enumerated lexicographically in (i_n, ..., i_{k+1}).
// These are coset representatives: |Lambda_{n,k}| = n!/k!.
std::vector<Permutation> lambda_cosets(int n, int k);

// Factor h in S_b as h = x * u with x in S_k and u the minimal-length
// representative of the coset S_k h; u is characterized by u^{-1} being
// increasing on 1..k.
std::pair<Permutation, Permutation> coset_factor(const Permutation& h, int k);

// All minimal-length representatives of S_k \ S_b.
std::vector<Permutation> minimal_right_reps(int b, int k);

// Word [i_1, ..., i_r] with p = s_{i_1} * s_{i_2} * ... * s_{i_r}; empty
// for the identity. The word length is the inversion number of p.
std::vector<int> reduced_word(const Permutation& p);

std::vector<Permutation> all_permutations(int n);

std::string to_string(const Permutation& p);  // one-line image list "[2,1,3]"

}  // namespace hcenter
