#pragma once

#include <map>
#include <vector>

#include "hcenter/partition.hpp"
#include "hcenter/rational.hpp"

namespace hcenter {

// A finitely supported probability measure on the integers: strictly
// positive rational weights summing to 1.
struct DiscreteMeasure {
    std::map<int, Rational> atoms;
};
void validate(const DiscreteMeasure& m);  // throws DomainError on violation

// Kerov transition measure of lambda: weight dim(lambda + box_i) /
// ((n+1) dim lambda) on the addable-corner content x_i. Defined for the
// empty partition (point mass at 0).
DiscreteMeasure transition_measure(const Partition& lambda);

// Kerov co-transition measure: weight dim(lambda - box_i) / dim lambda on
// the removable-corner content y_i. Undefined for the empty partition.
DiscreteMeasure cotransition_measure(const Partition& lambda);

// Moments m_0..m_kmax, m_k = sum_x w(x) x^k.
std::vector<Rational> moments(const DiscreteMeasure& m, int k_max);

// Boolean cumulants from moments and back. Both sequences are indexed so
// that entry 0 is the sentinel (m_0 = 1, B_0 = 0) and the defining
// recursion is m_k = sum_{i=1..k} B_i m_{k-i}.
std::vector<Rational> booleans_from_moments(const std::vector<Rational>& m);
std::vector<Rational> moments_from_booleans(const std::vector<Rational>& B);

// Moments and Boolean cumulants of the transition measure of lambda, to
// order k_max. Invariants: m_0 = 1, B_1 = 0 (the measure is centered).
struct MomentData {
    std::vector<Rational> m;
    std::vector<Rational> B;
};
MomentData moment_data(const Partition& lambda, int k_max);

}  // namespace hcenter
