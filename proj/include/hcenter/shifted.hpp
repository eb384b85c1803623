#pragma once

#include <map>

#include "hcenter/partition.hpp"
#include "hcenter/rational.hpp"

namespace hcenter {

// A shifted symmetric function, stored as a finite rational combination of
// the stable basis p#_mu. A function is evaluated at a partition lambda by
// evaluating each p#_mu (see eval_p_shift); two functions are equal iff
// they agree at every partition iff their coefficient maps agree.
class ShiftedSymFn {
public:
    static ShiftedSymFn zero() { return ShiftedSymFn(); }
    static ShiftedSymFn constant(const Rational& c);   // c * p#_()
    static ShiftedSymFn p_shift(const Partition& mu);  // p#_mu

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, Rational, CanonicalLess>& coeffs() const {
        return coeffs_;
    }

    void add_term(const Partition& mu, const Rational& c);
    Rational coefficient(const Partition& mu) const;

    ShiftedSymFn operator+(const ShiftedSymFn& o) const;
    ShiftedSymFn operator-(const ShiftedSymFn& o) const;
    ShiftedSymFn scaled(const Rational& c) const;

    // Largest |mu| in the support; the zero function has no degree.
    int degree() const;

    bool operator==(const ShiftedSymFn& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ShiftedSymFn& o) const { return !(*this == o); }

private:
    std::map<Partition, Rational, CanonicalLess> coeffs_;
};

// p#_mu(lambda) = (n falling |mu|) chihat^lambda(mu union 1^{n-|mu|}) for
// n = |lambda| >= |mu|, and 0 otherwise.
Rational eval_p_shift(const Partition& mu, const Partition& lambda);
Rational eval(const ShiftedSymFn& f, const Partition& lambda);

// Product in Lambda*: computed by evaluating both factors at every lambda
// with |lambda| <= deg f + deg g and interpolating back.
ShiftedSymFn multiply(const ShiftedSymFn& f, const ShiftedSymFn& g);

// The unique function of degree <= d taking the supplied values. The map
// must cover every |lambda| <= d; all supplied values, including any of
// size > d, are re-checked against the result, and a mismatch raises
// InterpolationError.
ShiftedSymFn interpolate(const std::map<Partition, Rational, CanonicalLess>& values,
                         int d);

// Shifted Schur function s*_mu = sum_rho (chi^mu(rho)/z_rho) p#_rho.
ShiftedSymFn s_star_to_p(const Partition& mu);
// Coefficients b with f = sum b_mu s*_mu: b_mu = sum_lambda a_lambda
// chi^mu(lambda) over lambda of size |mu|.
std::map<Partition, Rational, CanonicalLess> p_to_s_star(const ShiftedSymFn& f);

// Ratio of falling-factorial determinants
//   det[(x_i + l - i) falling (lambda_j + l - j)] /
//   det[(x_i + l - i) falling (l - j)],
// l = len(x) >= len(lambda). A vanishing denominator (two equal shifted
// arguments) raises DeterminantError. Appending zeros to x is neutral.
Rational s_star_det_eval(const Partition& lambda, const std::vector<Rational>& x);

// e*_k = s*_{(1^k)} and h*_k = s*_{(k)}.
ShiftedSymFn e_star(int k);
ShiftedSymFn h_star(int k);

// Terminating direct sums: e*_k(lambda) over strict index chains with
// shifts +k-1, +k-2, ..., +0; h*_k(lambda) over weak chains with shifts
// -k+1, -k+2, ..., -0.
Rational e_star_direct_eval(int k, const Partition& lambda);
Rational h_star_direct_eval(int k, const Partition& lambda);

// The involution [omega_bar f](lambda) = f(lambda'); maps s*_mu to
// s*_{mu'}, hence p#_k to (-1)^{k-1} p#_k.
ShiftedSymFn omega_bar(const ShiftedSymFn& f);

}  // namespace hcenter
