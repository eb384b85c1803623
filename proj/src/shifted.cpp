#include "hcenter/shifted.hpp"

#include <functional>

#include "hcenter/characters.hpp"
#include "hcenter/errors.hpp"

namespace hcenter {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

}  // namespace

ShiftedSymFn ShiftedSymFn::constant(const Rational& c) {
    ShiftedSymFn f;
    f.add_term(Partition(), c);
    return f;
}

ShiftedSymFn ShiftedSymFn::p_shift(const Partition& mu) {
    ShiftedSymFn f;
    f.add_term(mu, 1);
    return f;
}

void ShiftedSymFn::add_term(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end())
        coeffs_.emplace(mu, c);
    else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational ShiftedSymFn::coefficient(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

ShiftedSymFn ShiftedSymFn::operator+(const ShiftedSymFn& o) const {
    ShiftedSymFn r = *this;
    for (const auto& [mu, c] : o.coeffs_) r.add_term(mu, c);
    return r;
}

ShiftedSymFn ShiftedSymFn::operator-(const ShiftedSymFn& o) const {
    return *this + o.scaled(-1);
}

ShiftedSymFn ShiftedSymFn::scaled(const Rational& c) const {
    ShiftedSymFn r;
    if (c == 0) return r;
    for (const auto& [mu, a] : coeffs_) r.coeffs_.emplace(mu, a * c);
    return r;
}

int ShiftedSymFn::degree() const {
    if (is_zero()) throw DomainError("the zero function has no degree");
    int d = 0;
    for (const auto& [mu, c] : coeffs_) {
        (void)c;
        d = std::max(d, mu.size());
    }
    return d;
}

Rational eval_p_shift(const Partition& mu, const Partition& lambda) {
    int k = mu.size(), n = lambda.size();
    if (k > n) return 0;
    Rational falling(falling_factorial(Integer(n), k));
    return falling * rat(character(lambda, embed(mu, n))) / Rational(dim_irrep(lambda));
}

Rational eval(const ShiftedSymFn& f, const Partition& lambda) {
    Rational v = 0;
    for (const auto& [mu, c] : f.coeffs()) v += c * eval_p_shift(mu, lambda);
    return v;
}

ShiftedSymFn multiply(const ShiftedSymFn& f, const ShiftedSymFn& g) {
    if (f.is_zero() || g.is_zero()) return ShiftedSymFn::zero();
    int d = f.degree() + g.degree();
    std::map<Partition, Rational, CanonicalLess> values;
    for (const auto& lambda : partitions_up_to(d))
        values.emplace(lambda, eval(f, lambda) * eval(g, lambda));
    return interpolate(values, d);
}

ShiftedSymFn interpolate(const std::map<Partition, Rational, CanonicalLess>& values,
                         int d) {
    if (d < 0) throw DomainError("interpolation degree must be nonnegative");
    std::map<Partition, ShiftedSymFn, CanonicalLess> schur;  // s*_nu in p# form
    ShiftedSymFn f;
    // s*_nu(mu) vanishes for |nu| <= |mu| except at nu = mu, where it is
    // H(mu); solving grade by grade is therefore triangular.
    for (const auto& mu : partitions_up_to(d)) {
        auto it = values.find(mu);
        if (it == values.end())
            throw DomainError("interpolation needs a value at every |lambda| <= d");
        Rational residue = it->second - eval(f, mu);
        if (residue != 0) {
            Rational a = residue / Rational(hook_product(mu));
            f = f + s_star_to_p(mu).scaled(a);
        }
    }
    for (const auto& [lambda, v] : values)
        if (eval(f, lambda) != v)
            throw InterpolationError(
                "supplied values are inconsistent with degree bound " +
                std::to_string(d) + " at lambda = " + to_string(lambda));
    return f;
}

ShiftedSymFn s_star_to_p(const Partition& mu) {
    ShiftedSymFn f;
    for (const auto& rho : partitions_of(mu.size()))
        f.add_term(rho, rat(character(mu, rho)) / Rational(z_of(rho)));
    return f;
}

std::map<Partition, Rational, CanonicalLess> p_to_s_star(const ShiftedSymFn& f) {
    std::map<Partition, Rational, CanonicalLess> out;
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_size;
    for (const auto& [lambda, a] : f.coeffs()) by_size[lambda.size()].push_back({lambda, a});
    for (const auto& [n, terms] : by_size) {
        for (const auto& mu : partitions_of(n)) {
            Rational b = 0;
            for (const auto& [lambda, a] : terms) b += a * rat(character(mu, lambda));
            if (b != 0) out.emplace(mu, b);
        }
    }
    return out;
}

namespace {

Rational det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return d;
}

}  // namespace

Rational s_star_det_eval(const Partition& lambda, const std::vector<Rational>& x) {
    int l = static_cast<int>(x.size());
    if (l < lambda.length())
        throw DomainError("s_star_det_eval needs at least len(lambda) arguments");
    std::vector<std::vector<Rational>> num(l, std::vector<Rational>(l));
    std::vector<std::vector<Rational>> den(l, std::vector<Rational>(l));
    for (int i = 1; i <= l; ++i) {
        Rational base = x[i - 1] + (l - i);
        for (int j = 1; j <= l; ++j) {
            num[i - 1][j - 1] = falling_factorial(base, lambda.part(j) + l - j);
            den[i - 1][j - 1] = falling_factorial(base, l - j);
        }
    }
    Rational d = det(std::move(den));
    if (d == 0)
        throw DeterminantError(
            "vanishing denominator determinant: two arguments with equal x_i - i");
    return det(std::move(num)) / d;
}

ShiftedSymFn e_star(int k) {
    if (k < 0) throw DomainError("e_star index must be nonnegative");
    return s_star_to_p(Partition(std::vector<int>(k, 1)));
}

ShiftedSymFn h_star(int k) {
    if (k < 0) throw DomainError("h_star index must be nonnegative");
    if (k == 0) return ShiftedSymFn::constant(1);
    return s_star_to_p(Partition(std::vector<int>{k}));
}

Rational e_star_direct_eval(int k, const Partition& lambda) {
    if (k < 0) throw DomainError("e_star index must be nonnegative");
    int l = lambda.length();
    Rational total = 0;
    // Chains i_1 < ... < i_k within 1..len(lambda); the j-th factor is
    // lambda_{i_j} + k - j.
    std::function<void(int, int, Rational)> rec = [&](int j, int start, Rational acc) {
        if (j > k) {
            total += acc;
            return;
        }
        for (int i = start; i <= l - (k - j); ++i)
            rec(j + 1, i + 1, acc * (Rational(lambda.part(i)) + (k - j)));
    };
    rec(1, 1, 1);
    return total;
}

Rational h_star_direct_eval(int k, const Partition& lambda) {
    if (k < 0) throw DomainError("h_star index must be nonnegative");
    int l = lambda.length();
    if (k == 0) return 1;
    if (l == 0) return 0;
    Rational total = 0;
    // Chains i_1 <= ... <= i_k within 1..len(lambda); the j-th factor is
    // lambda_{i_j} - k + j.
    std::function<void(int, int, Rational)> rec = [&](int j, int start, Rational acc) {
        if (j > k) {
            total += acc;
            return;
        }
        for (int i = start; i <= l; ++i)
            rec(j + 1, i, acc * (Rational(lambda.part(i)) - (k - j)));
    };
    rec(1, 1, 1);
    return total;
}

ShiftedSymFn omega_bar(const ShiftedSymFn& f) {
    ShiftedSymFn out;
    for (const auto& [mu, b] : p_to_s_star(f))
        out = out + s_star_to_p(conjugate(mu)).scaled(b);
    return out;
}

}  // namespace hcenter
