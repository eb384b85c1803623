#include "hcenter/group_algebra.hpp"

#include "hcenter/errors.hpp"

namespace hcenter {

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
    GroupAlgebraElement e(n);
    e.add_term(Permutation(n), 1);
    return e;
}

void GroupAlgebraElement::add_term(const Permutation& g, const Rational& c) {
    if (g.degree() != n_) throw DomainError("group algebra term of wrong degree");
    if (c == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational GroupAlgebraElement::coefficient(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (n_ != o.n_) throw DomainError("adding group algebra elements of different degree");
    GroupAlgebraElement r = *this;
    for (const auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    return *this + o.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
    GroupAlgebraElement r(n_);
    if (c == 0) return r;
    for (const auto& [g, a] : terms_) r.terms_.emplace(g, a * c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    if (n_ != o.n_) throw DomainError("multiplying group algebra elements of different degree");
    GroupAlgebraElement r(n_);
    for (const auto& [g, a] : terms_)
        for (const auto& [h, b] : o.terms_) r.add_term(g * h, a * b);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::power(int k) const {
    if (k < 0) throw DomainError("negative power in group algebra");
    GroupAlgebraElement r = unit(n_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

GroupAlgebraElement GroupAlgebraElement::conjugated_by(const Permutation& g) const {
    if (g.degree() != n_) throw DomainError("conjugating by a permutation of wrong degree");
    GroupAlgebraElement r(n_);
    Permutation gi = g.inverse();
    for (const auto& [h, c] : terms_) r.add_term(g * h * gi, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::promoted(int m) const {
    GroupAlgebraElement r(m);
    for (const auto& [g, c] : terms_) r.add_term(g.promote(m), c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::projected_to(int k) const {
    if (k < 0 || k > n_) throw DomainError("projection target outside 0..degree");
    GroupAlgebraElement r(k);
    for (const auto& [g, c] : terms_)
        if (g.fixes_above(k)) r.add_term(g.restrict_to(k), c);
    return r;
}

bool GroupAlgebraElement::is_central() const {
    std::map<Partition, std::pair<Rational, Integer>, CanonicalLess> classes;
    for (const auto& [g, c] : terms_) {
        Partition t = g.cycle_type();
        auto it = classes.find(t);
        if (it == classes.end())
            classes.emplace(t, std::make_pair(c, Integer(1)));
        else if (it->second.first != c)
            return false;
        else
            it->second.second += 1;
    }
    // Every element of each touched class must be present.
    for (const auto& [t, cc] : classes) {
        Integer z = 1;
        int prev = 0, mult = 0;
        for (int i = t.length(); i >= 1; --i) {
            int p = t.part(i);
            if (p == prev) {
                ++mult;
            } else {
                prev = p;
                mult = 1;
            }
            z *= Integer(p) * mult;
        }
        if (cc.second * z != factorial(n_)) return false;
    }
    return true;
}

GroupAlgebraElement jucys_murphy(int k, int n) {
    if (k < 1 || k > n) throw DomainError("Jucys-Murphy index outside 1..n");
    GroupAlgebraElement j(n);
    for (int i = 1; i < k; ++i) j.add_term(Permutation::transposition(n, i, k), 1);
    return j;
}

}  // namespace hcenter
