#include "hcenter/measures.hpp"

#include "hcenter/characters.hpp"
#include "hcenter/errors.hpp"

namespace hcenter {

void validate(const DiscreteMeasure& m) {
    Rational total = 0;
    for (const auto& [x, w] : m.atoms) {
        (void)x;
        if (w <= 0) throw DomainError("measure weights must be positive");
        total += w;
    }
    if (total != 1) throw DomainError("measure weights must sum to 1");
}

DiscreteMeasure transition_measure(const Partition& lambda) {
    DiscreteMeasure m;
    auto seq = interlacing_sequences(lambda);
    Rational denom = Rational(lambda.size() + 1) * Rational(dim_irrep(lambda));
    for (size_t i = 0; i < seq.xs.size(); ++i) {
        Partition grown = grow(lambda, static_cast<int>(i) + 1);
        m.atoms[seq.xs[i]] = Rational(dim_irrep(grown)) / denom;
    }
    validate(m);
    return m;
}

DiscreteMeasure cotransition_measure(const Partition& lambda) {
    if (lambda.empty())
        throw DomainError("cotransition measure is undefined for the empty partition");
    DiscreteMeasure m;
    auto seq = interlacing_sequences(lambda);
    Rational denom = Rational(dim_irrep(lambda));
    for (size_t i = 0; i < seq.ys.size(); ++i) {
        Partition shrunk = shrink(lambda, static_cast<int>(i) + 1);
        m.atoms[seq.ys[i]] = Rational(dim_irrep(shrunk)) / denom;
    }
    validate(m);
    return m;
}

std::vector<Rational> moments(const DiscreteMeasure& m, int k_max) {
    if (k_max < 0) throw DomainError("moment order must be nonnegative");
    std::vector<Rational> out(k_max + 1, Rational(0));
    out[0] = 1;
    for (const auto& [x, w] : m.atoms) {
        Rational p = 1;
        for (int k = 1; k <= k_max; ++k) {
            p *= x;
            out[k] += w * p;
        }
    }
    return out;
}

std::vector<Rational> booleans_from_moments(const std::vector<Rational>& m) {
    if (m.empty() || m[0] != 1)
        throw DomainError("moment sequence must start with m_0 = 1");
    std::vector<Rational> B(m.size(), Rational(0));
    for (size_t k = 1; k < m.size(); ++k) {
        Rational b = m[k];
        for (size_t i = 1; i < k; ++i) b -= B[i] * m[k - i];
        B[k] = b;
    }
    return B;
}

std::vector<Rational> moments_from_booleans(const std::vector<Rational>& B) {
    if (B.empty() || B[0] != 0)
        throw DomainError("Boolean cumulant sequence must start with the 0 sentinel");
    std::vector<Rational> m(B.size(), Rational(0));
    m[0] = 1;
    for (size_t k = 1; k < B.size(); ++k) {
        Rational v = 0;
        for (size_t i = 1; i <= k; ++i) v += B[i] * m[k - i];
        m[k] = v;
    }
    return m;
}

MomentData moment_data(const Partition& lambda, int k_max) {
    MomentData d;
    d.m = moments(transition_measure(lambda), k_max);
    d.B = booleans_from_moments(d.m);
    if (k_max >= 1 && d.B[1] != 0)
        throw Error("transition measure is not centered");
    return d;
}

}  // namespace hcenter
