#pragma once

#include <map>

#include "hcenter/permutation.hpp"
#include "hcenter/rational.hpp"

namespace hcenter {

// An element of Q[S_n]: a finite rational combination of permutations of
// degree n. Zero coefficients are never stored.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    static GroupAlgebraElement unit(int n);  // the identity permutation

    int degree() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& g, const Rational& c);
    Rational coefficient(const Permutation& g) const;

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(const Rational& c) const;
    // Convolution product; used directly only on small groups.
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement power(int k) const;

    GroupAlgebraElement conjugated_by(const Permutation& g) const;  // g x g^{-1}
    GroupAlgebraElement promoted(int m) const;
    // pr_k: keep the terms fixing every point above k, restricted to S_k.
    GroupAlgebraElement projected_to(int k) const;

    // Central iff the coefficient is constant on conjugacy classes.
    bool is_central() const;

    bool operator==(const GroupAlgebraElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

// J_k = sum of (i,k) over i < k, as an element of Q[S_n]; J_1 = 0.
GroupAlgebraElement jucys_murphy(int k, int n);

}  // namespace hcenter
