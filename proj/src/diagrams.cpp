#include "hcenter/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hcenter/errors.hpp"
#include "hcenter/group_algebra.hpp"

namespace hcenter {

namespace {

const char* kind_name(SliceKind k) {
    switch (k) {
        case SliceKind::CupCW: return "cup_cw";
        case SliceKind::CupCCW: return "cup_ccw";
        case SliceKind::CapCW: return "cap_cw";
        case SliceKind::CapCCW: return "cap_ccw";
        case SliceKind::Cross: return "cross";
        case SliceKind::Dot: return "dot";
    }
    return "?";
}

[[noreturn]] void bad_slice(const Slice& s, const std::string& why) {
    throw DiagramError("slice " + std::string(kind_name(s.kind)) + " at position " +
                       std::to_string(s.pos) + ": " + why);
}

// Boundary replay shared by validate() and the sweep: applies the sign
// bookkeeping of one slice, checking positions and orientations.
void apply_signs(SignSequence& signs, const Slice& s) {
    const int m = static_cast<int>(signs.size());
    const int p = s.pos;
    switch (s.kind) {
        case SliceKind::CupCW:
            if (p < 0 || p > m) bad_slice(s, "position out of range");
            signs.insert(signs.begin() + p, {Sign::Plus, Sign::Minus});
            return;
        case SliceKind::CupCCW:
            if (p < 0 || p > m) bad_slice(s, "position out of range");
            signs.insert(signs.begin() + p, {Sign::Minus, Sign::Plus});
            return;
        case SliceKind::CapCW:
            if (p < 0 || p + 1 >= m) bad_slice(s, "position out of range");
            if (signs[p] != Sign::Plus || signs[p + 1] != Sign::Minus)
                bad_slice(s, "requires strands (+,-)");
            signs.erase(signs.begin() + p, signs.begin() + p + 2);
            return;
        case SliceKind::CapCCW:
            if (p < 0 || p + 1 >= m) bad_slice(s, "position out of range");
            if (signs[p] != Sign::Minus || signs[p + 1] != Sign::Plus)
                bad_slice(s, "requires strands (-,+)");
            signs.erase(signs.begin() + p, signs.begin() + p + 2);
            return;
        case SliceKind::Cross:
            if (p < 0 || p + 1 >= m) bad_slice(s, "position out of range");
            if (signs[p] != Sign::Plus || signs[p + 1] != Sign::Plus)
                bad_slice(s, "requires strands (+,+)");
            return;
        case SliceKind::Dot:
            if (p < 0 || p >= m) bad_slice(s, "position out of range");
            if (signs[p] != Sign::Plus) bad_slice(s, "requires an upward strand");
            return;
    }
}

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

}  // namespace

DiagramWord validate(DiagramWord w) {
    SignSequence signs = w.bottom;
    UnionFind uf;
    std::vector<int> live;
    live.reserve(signs.size());
    for (size_t i = 0; i < signs.size(); ++i) live.push_back(uf.add());
    int dots = 0;
    int crossings = 0;
    for (const Slice& s : w.slices) {
        apply_signs(signs, s);
        const int p = s.pos;
        switch (s.kind) {
            case SliceKind::CupCW:
            case SliceKind::CupCCW: {
                const int id = uf.add();
                live.insert(live.begin() + p, {id, id});
                break;
            }
            case SliceKind::CapCW:
            case SliceKind::CapCCW:
                uf.unite(live[p], live[p + 1]);
                live.erase(live.begin() + p, live.begin() + p + 2);
                break;
            case SliceKind::Cross:
                std::swap(live[p], live[p + 1]);
                ++crossings;
                break;
            case SliceKind::Dot:
                ++dots;
                break;
        }
    }
    if (signs != w.top) throw DiagramError("declared top boundary does not match the slices");
    w.dots = dots;
    w.crossings = crossings;
    w.components = uf.classes();
    w.validated = true;
    return w;
}

DiagramWord make_c(int k) {
    if (k < 0) throw DomainError("dot count must be nonnegative");
    DiagramWord w;
    w.slices.push_back({SliceKind::CupCW, 0});
    for (int i = 0; i < k; ++i) w.slices.push_back({SliceKind::Dot, 0});
    w.slices.push_back({SliceKind::CapCW, 0});
    return validate(std::move(w));
}

DiagramWord make_c_tilde(int k) {
    if (k < 0) throw DomainError("dot count must be nonnegative");
    DiagramWord w;
    w.slices.push_back({SliceKind::CupCCW, 0});
    for (int i = 0; i < k; ++i) w.slices.push_back({SliceKind::Dot, 1});
    w.slices.push_back({SliceKind::CapCCW, 0});
    return validate(std::move(w));
}

DiagramWord close_permutation(const Permutation& g, const std::vector<int>& dots) {
    const int k = g.degree();
    if (static_cast<int>(dots.size()) != k)
        throw DomainError("close_permutation needs one dot count per strand");
    DiagramWord w;
    for (int p = 0; p < k; ++p) w.slices.push_back({SliceKind::CupCW, p});
    for (int i : reduced_word(g)) w.slices.push_back({SliceKind::Cross, i - 1});
    for (int j = 0; j < k; ++j) {
        if (dots[j] < 0) throw DomainError("dot count must be nonnegative");
        for (int d = 0; d < dots[j]; ++d) w.slices.push_back({SliceKind::Dot, j});
    }
    for (int p = k - 1; p >= 0; --p) w.slices.push_back({SliceKind::CapCW, p});
    return validate(std::move(w));
}

DiagramWord make_alpha(const Partition& mu) {
    return close_permutation(t_mu(mu), std::vector<int>(mu.size(), 0));
}

DiagramWord tensor(const DiagramWord& a, const DiagramWord& b) {
    DiagramWord w;
    w.bottom = a.bottom;
    w.bottom.insert(w.bottom.end(), b.bottom.begin(), b.bottom.end());
    w.top = a.top;
    w.top.insert(w.top.end(), b.top.begin(), b.top.end());
    w.slices = a.slices;
    const int off = static_cast<int>(a.top.size());
    for (Slice s : b.slices) {
        s.pos += off;
        w.slices.push_back(s);
    }
    return validate(std::move(w));
}

DiagramWord compose(const DiagramWord& upper, const DiagramWord& lower) {
    if (lower.top != upper.bottom)
        throw DiagramError("compose requires the lower top to match the upper bottom");
    DiagramWord w;
    w.bottom = lower.bottom;
    w.top = upper.top;
    w.slices = lower.slices;
    w.slices.insert(w.slices.end(), upper.slices.begin(), upper.slices.end());
    return validate(std::move(w));
}

std::vector<Slice> mixed_cross_ud(int p) {
    return {{SliceKind::CupCCW, p}, {SliceKind::Cross, p + 1}, {SliceKind::CapCW, p + 2}};
}

std::vector<Slice> mixed_cross_du(int p) {
    return {{SliceKind::CupCW, p + 2}, {SliceKind::Cross, p + 1}, {SliceKind::CapCCW, p}};
}

std::vector<Slice> mixed_cross_dd(int p) {
    return {{SliceKind::CupCW, p + 2},
            {SliceKind::CupCW, p + 3},
            {SliceKind::Cross, p + 2},
            {SliceKind::CapCCW, p + 1},
            {SliceKind::CapCCW, p}};
}

std::vector<Slice> right_curl(int p) {
    return {{SliceKind::CupCW, p + 1}, {SliceKind::Cross, p}, {SliceKind::CapCW, p + 1}};
}

std::vector<Slice> left_curl(int p) {
    return {{SliceKind::CupCCW, p}, {SliceKind::Cross, p + 1}, {SliceKind::CapCCW, p}};
}

ScaledDiagram involution_I(ScaledDiagram d) {
    if (!d.word.validated) d.word = validate(std::move(d.word));
    if ((d.word.dots + d.word.crossings) % 2 != 0) d.scalar = -d.scalar;
    return d;
}

int degree_bound(const DiagramWord& w) {
    if (!w.validated) return degree_bound(validate(w));
    return w.dots + w.crossings + w.components;
}

std::vector<int> region_labels(const SignSequence& signs, int base) {
    const int m = static_cast<int>(signs.size());
    std::vector<int> labels(m + 1);
    labels[m] = base;
    for (int i = m - 1; i >= 0; --i)
        labels[i] = labels[i + 1] + (signs[i] == Sign::Plus ? 1 : -1);
    return labels;
}

namespace {

// Restores the normal form of a tuple after factors at indices <= from
// changed, peeling subgroup parts off to the left. Factor i decomposes as
// x * u with x in S_{labels[i-1]} and u the minimal coset representative;
// x migrates into factor i-1.
void renormalize(BasisTuple& t, const std::vector<int>& labels, int from) {
    for (int i = std::min<int>(from, static_cast<int>(t.size()) - 1); i >= 1; --i) {
        const int k = labels[i - 1];
        auto [x, u] = coset_factor(t[i], k);
        t[i] = std::move(u);
        if (!x.is_identity()) {
            const int b = t[i - 1].degree();
            t[i - 1] = t[i - 1] * x.promote(b);
        }
    }
}

using TermMap = std::map<BasisTuple, Rational>;

void add_term(TermMap& out, BasisTuple t, const Rational& c) {
    auto it = out.find(t);
    if (it == out.end()) {
        out.emplace(std::move(t), c);
    } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

}  // namespace

SweepState basis_state(const SignSequence& signs, int base, BasisTuple t) {
    SweepState s;
    s.signs = signs;
    s.base = base;
    s.labels = region_labels(signs, base);
    if (static_cast<int>(t.size()) != static_cast<int>(signs.size()) + 1)
        throw DiagramError("basis tuple length must be one more than the strand count");
    for (int l : s.labels)
        if (l < 0) throw DiagramError("negative region label: the bimodule is zero");
    if (t[0].degree() != s.labels[0]) throw DiagramError("tuple factor 0 has the wrong degree");
    for (size_t i = 1; i < t.size(); ++i) {
        const int b = std::max(s.labels[i - 1], s.labels[i]);
        if (t[i].degree() != b)
            throw DiagramError("tuple factor " + std::to_string(i) + " has the wrong degree");
    }
    renormalize(t, s.labels, static_cast<int>(t.size()) - 1);
    s.terms.emplace(std::move(t), Rational(1));
    return s;
}

void apply_slice(SweepState& s, const Slice& slice) {
    // The sign bookkeeping also validates position and orientation, and it
    // must happen even when the state has no terms left.
    SignSequence new_signs = s.signs;
    apply_signs(new_signs, slice);
    const std::vector<int> old_labels = s.labels;
    const std::vector<int> new_labels = region_labels(new_signs, s.base);
    for (int l : new_labels) {
        // A negative label means the zero bimodule: the state dies but the
        // boundary bookkeeping continues.
        if (l < 0) {
            s.signs = std::move(new_signs);
            s.labels = new_labels;
            s.terms.clear();
            return;
        }
    }

    const int p = slice.pos;
    TermMap out;
    switch (slice.kind) {
        case SliceKind::CupCW: {
            // Splits the identity of region a over the middle region a-1:
            // the sum of u (x) u^{-1} over coset representatives. In a
            // region labeled 0 the map is zero.
            const int a = old_labels[p];
            if (a == 0) break;
            for (const auto& [t, c] : s.terms) {
                for (int i = 1; i <= a; ++i) {
                    BasisTuple nt = t;
                    Permutation u = t_single(i, a);
                    Permutation ui = u.inverse();
                    nt.insert(nt.begin() + (p + 1), {std::move(u), std::move(ui)});
                    renormalize(nt, new_labels, p + 2);
                    add_term(out, std::move(nt), c);
                }
            }
            break;
        }
        case SliceKind::CupCCW: {
            const int a = old_labels[p];
            for (const auto& [t, c] : s.terms) {
                BasisTuple nt = t;
                nt.insert(nt.begin() + (p + 1), {Permutation(a + 1), Permutation(a + 1)});
                add_term(out, std::move(nt), c);
            }
            break;
        }
        case SliceKind::CapCW: {
            // Multiplication of the two factors, absorbed into the left
            // neighbor.
            for (const auto& [t, c] : s.terms) {
                Permutation z = t[p + 1] * t[p + 2];
                BasisTuple nt(t.begin(), t.begin() + (p + 1));
                nt.insert(nt.end(), t.begin() + (p + 3), t.end());
                const int b = nt[p].degree();
                nt[p] = nt[p] * z.promote(b);
                renormalize(nt, new_labels, p);
                add_term(out, std::move(nt), c);
            }
            break;
        }
        case SliceKind::CapCCW: {
            // Projection of the fused factor from S_{a+1} to S_a: terms
            // whose fused factor moves a+1 die.
            const int a = old_labels[p];
            for (const auto& [t, c] : s.terms) {
                Permutation w = t[p + 1] * t[p + 2];
                if (w(a + 1) != a + 1) continue;
                Permutation z = w.restrict_to(a);
                BasisTuple nt(t.begin(), t.begin() + (p + 1));
                nt.insert(nt.end(), t.begin() + (p + 3), t.end());
                const int b = nt[p].degree();
                nt[p] = nt[p] * z.promote(b);
                renormalize(nt, new_labels, p);
                add_term(out, std::move(nt), c);
            }
            break;
        }
        case SliceKind::Cross: {
            // Fuse the two factors over the middle region, multiply by the
            // extra transposition, and refold.
            const int c_right = old_labels[p + 2];
            const Permutation s_top = Permutation::adjacent(c_right + 2, c_right + 1);
            for (const auto& [t, c] : s.terms) {
                Permutation fused = t[p + 1] * t[p + 2].promote(c_right + 2) * s_top;
                BasisTuple nt = t;
                nt[p + 1] = std::move(fused);
                nt[p + 2] = Permutation(c_right + 1);
                renormalize(nt, new_labels, p + 2);
                add_term(out, std::move(nt), c);
            }
            break;
        }
        case SliceKind::Dot: {
            // Right multiplication by the Jucys-Murphy element J_a on the
            // factor of the dotted strand.
            const int a = old_labels[p];
            for (const auto& [t, c] : s.terms) {
                for (int i = 1; i < a; ++i) {
                    BasisTuple nt = t;
                    nt[p + 1] = nt[p + 1] * Permutation::transposition(nt[p + 1].degree(), i, a);
                    renormalize(nt, new_labels, p + 1);
                    add_term(out, std::move(nt), c);
                }
            }
            break;
        }
    }
    s.signs = std::move(new_signs);
    s.labels = new_labels;
    s.terms = std::move(out);
}

void apply_word(SweepState& s, const std::vector<Slice>& slices) {
    for (const Slice& sl : slices) apply_slice(s, sl);
}

std::vector<BasisTuple> enumerate_basis(const SignSequence& signs, int base) {
    const std::vector<int> labels = region_labels(signs, base);
    for (int l : labels)
        if (l < 0) return {};
    std::vector<std::vector<Permutation>> choices;
    choices.push_back(all_permutations(labels[0]));
    for (size_t i = 1; i < labels.size(); ++i) {
        if (signs[i - 1] == Sign::Plus) {
            choices.push_back({Permutation(labels[i - 1])});
        } else {
            std::vector<Permutation> reps;
            for (int j = 1; j <= labels[i]; ++j) reps.push_back(t_single(j, labels[i]).inverse());
            std::sort(reps.begin(), reps.end());
            choices.push_back(std::move(reps));
        }
    }
    std::vector<BasisTuple> result;
    BasisTuple current;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == choices.size()) {
            result.push_back(current);
            return;
        }
        for (const Permutation& g : choices[i]) {
            current.push_back(g);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

CentralElement f_n_evaluate(const DiagramWord& w, int n) {
    if (!w.validated) return f_n_evaluate(validate(w), n);
    if (!w.bottom.empty() || !w.top.empty())
        throw DiagramError("the functor evaluates closed diagrams only");
    if (n < 0) throw DomainError("symmetric group degree must be nonnegative");
    SweepState s = basis_state({}, n, {Permutation(n)});
    apply_word(s, w.slices);
    GroupAlgebraElement el(n);
    for (const auto& [t, c] : s.terms) el.add_term(t[0], c);
    return from_group_algebra(el);
}

ShiftedSymFn phi(const DiagramWord& w) {
    const DiagramWord v = w.validated ? w : validate(w);
    if (!v.bottom.empty() || !v.top.empty())
        throw DiagramError("phi is defined for closed diagrams only");
    const int d0 = degree_bound(v);
    int d = d0;
    for (int attempt = 0;; ++attempt) {
        std::map<Partition, Rational, CanonicalLess> values;
        for (int n = 0; n <= d; ++n) {
            const auto eig = f_n_evaluate(v, n).eigenvalues();
            for (const Partition& lam : partitions_of(n)) {
                auto it = eig->find(lam);
                values[lam] = (it == eig->end()) ? Rational(0) : it->second;
            }
        }
        ShiftedSymFn f = interpolate(values, d);
        const Partition* bad = nullptr;
        Partition bad_storage;
        for (int n = d + 1; n <= d + 2 && bad == nullptr; ++n) {
            const auto eig = f_n_evaluate(v, n).eigenvalues();
            for (const Partition& lam : partitions_of(n)) {
                auto it = eig->find(lam);
                const Rational want = (it == eig->end()) ? Rational(0) : it->second;
                if (eval(f, lam) != want) {
                    bad_storage = lam;
                    bad = &bad_storage;
                    break;
                }
            }
        }
        if (bad == nullptr) return f;
        if (attempt >= 1)
            throw DegreeBoundError("phi verification failed at lambda = " + to_string(*bad) +
                                   " even after raising the degree bound to " + std::to_string(d));
        d = std::max(2 * d0, d0 + 1);
    }
}

ShiftedSymFn phi(const ScaledDiagram& d) { return phi(d.word).scaled(d.scalar); }

ShiftedSymFn closure_of_central(const CentralElement& x) {
    ShiftedSymFn result = ShiftedSymFn::zero();
    for (const auto& [mu, c] : x.class_coeffs()) {
        if (c == 0) continue;
        result = result + phi(make_alpha(mu)).scaled(c * Rational(class_size(mu)));
    }
    return result;
}

}  // namespace hcenter
