#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hcenter/group_algebra.hpp"
#include "hcenter/partition.hpp"

namespace hcenter {

// Irreducible character value chi^lambda(mu); requires |lambda| = |mu|.
// Computed by the Murnaghan-Nakayama rule on beta-sets, memoized.
long long character(const Partition& lambda, const Partition& mu);

// dim S^lambda = |lambda|! / H(lambda).
Integer dim_irrep(const Partition& lambda);

// Full character table of S_n; rows and columns in canonical partition
// order. Tables are cached in memory and on disk (JSON, values as decimal
// strings) under HCENTER_CACHE_DIR, default ./.hcenter-cache.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<long long>> chi;  // chi[lambda_index][mu_index]
    int index_of(const Partition& p) const;
};
std::shared_ptr<const CharacterTable> character_table(int n);
// Same, but a disk hit is recomputed and compared entry by entry; any
// mismatch is an error. Used by tests and when HCENTER_CACHE_VERIFY is set.
std::shared_ptr<const CharacterTable> character_table_verified(int n);

// Centralizer order z_mu = prod s^{m_s} m_s! of a full cycle type.
Integer z_of(const Partition& full_type);
// z of the type mu embedded into S_n (1-parts appended); requires |mu| <= n.
Integer centralizer_order(const Partition& mu, int n);
// |C_mu| inside S_{|full_type|}.
Integer class_size(const Partition& full_type);

// An element of Z(Q[S_n]) stored by class coefficients: the coefficient of
// each full cycle type (a partition of n). The eigenvalue vector lists the
// normalized character values chihat^lambda, lambda over partitions of n;
// it is computed lazily and cached, safe under concurrent readers.
class CentralElement {
public:
    explicit CentralElement(int n) : n_(n) {}
    static CentralElement zero(int n) { return CentralElement(n); }
    static CentralElement identity(int n);

    CentralElement(const CentralElement& o);
    CentralElement& operator=(const CentralElement& o);

    int degree() const { return n_; }
    const std::map<Partition, Rational, CanonicalLess>& class_coeffs() const {
        return coeffs_;
    }
    bool is_zero() const { return coeffs_.empty(); }

    void add_coeff(const Partition& full_type, const Rational& c);
    Rational coeff(const Partition& full_type) const;

    std::shared_ptr<const std::map<Partition, Rational, CanonicalLess>> eigenvalues()
        const;

    CentralElement operator+(const CentralElement& o) const;
    CentralElement operator-(const CentralElement& o) const;
    CentralElement scaled(const Rational& c) const;

    bool operator==(const CentralElement& o) const {
        return n_ == o.n_ && coeffs_ == o.coeffs_;
    }

private:
    int n_;
    std::map<Partition, Rational, CanonicalLess> coeffs_;
    mutable std::shared_ptr<const std::map<Partition, Rational, CanonicalLess>> eigen_;
    mutable std::mutex lock_;
};

// C_{mu,n}: coefficient 1 on the class of cycle type embed(mu, n).
CentralElement class_sum(const Partition& mu, int n);

// A_{mu,n} = (z_{mu,n} / (n-|mu|)!) C_{mu,n}; the zero element when
// |mu| > n. These are the stable normalized conjugacy class sums.
CentralElement normalized_class_sum(const Partition& mu, int n);

// chi^lambda(iota(x)) / dim S^lambda for x central of degree <= |lambda|;
// error for degree above |lambda|.
Rational normalized_character(const Partition& lambda, const CentralElement& x);

// Pointwise product of eigenvalue vectors, converted back to class
// coefficients; this is the product in Z(Q[S_n]).
CentralElement central_multiply(const CentralElement& a, const CentralElement& b);
CentralElement central_from_eigenvalues(
    int n, const std::map<Partition, Rational, CanonicalLess>& eigen);

// Conversion to and from explicit group algebra elements (small n only for
// to_group_algebra); from_group_algebra checks centrality exactly.
CentralElement from_group_algebra(const GroupAlgebraElement& x);
GroupAlgebraElement to_group_algebra(const CentralElement& x);

// pr_n(J_{n+1}^k), computed by expanding the power in Q[S_{n+1}].
CentralElement jm_projected_power(int k, int n);

// sum_{i=1..n} s_i...s_{n-1} J_n^k s_{n-1}...s_i; k = 0 gives n times the
// identity.
CentralElement jm_conjugated_sum(int k, int n);

// (1/dim S^lambda) e_lambda: class coefficient chi^lambda(mu)/n! on each mu.
CentralElement young_idempotent_closure_vector(const Partition& lambda);

}  // namespace hcenter
