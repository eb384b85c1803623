#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "hcenter/characters.hpp"
#include "hcenter/errors.hpp"
#include "hcenter/shifted.hpp"

using namespace hcenter;

namespace {

ShiftedSymFn p_sharp(std::initializer_list<int> mu) {
    return ShiftedSymFn::p_shift(Partition(std::vector<int>(mu)));
}

std::vector<Rational> det_args(const Partition& lam, int min_len) {
    std::vector<Rational> x;
    for (int part : lam.parts()) x.emplace_back(part);
    while ((int)x.size() < min_len) x.emplace_back(0);
    return x;
}

}  // namespace

TEST_CASE("evaluation of p# generators") {
    // p#_1(lambda) = n and p#_()(lambda) = 1.
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CHECK(eval_p_shift(Partition(), lam) == 1);
            CHECK(eval_p_shift(Partition({1}), lam) == n);
        }

    // p#_2(lambda) = 2 * (sum of contents).
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n)) {
            Rational sum = 0;
            for (int c : content_multiset(lam)) sum += c;
            CHECK(eval_p_shift(Partition({2}), lam) == 2 * sum);
        }

    // Vanishing below the degree: p#_mu(lambda) = 0 whenever |lambda| < |mu|.
    CHECK(eval_p_shift(Partition({3}), Partition({2})) == 0);
    CHECK(eval_p_shift(Partition({2, 2}), Partition({2, 1})) == 0);

    // Frozen values at lambda = (2,1): n = 3, chihat on 3-cycles = -1/2,
    // so p#_3 = 6 * (-1/2) = -3; p#_{2,1} = 6 * 0 = 0; p#_{1,1} = 6.
    Partition lam({2, 1});
    CHECK(eval_p_shift(Partition({3}), lam) == -3);
    CHECK(eval_p_shift(Partition({2, 1}), lam) == 0);
    CHECK(eval_p_shift(Partition({1, 1}), lam) == 6);
}

TEST_CASE("linear structure and degree") {
    ShiftedSymFn f = p_sharp({2}).scaled(Rational(1, 2)) + p_sharp({1, 1});
    CHECK(f.coefficient(Partition({2})) == Rational(1, 2));
    CHECK(f.coefficient(Partition({1, 1})) == 1);
    CHECK(f.coefficient(Partition({3})) == 0);
    CHECK(f.degree() == 2);
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(ShiftedSymFn::zero().degree(), DomainError);
    CHECK(ShiftedSymFn::constant(5).degree() == 0);

    // Adding a cancelling term drops it from the support.
    ShiftedSymFn g = p_sharp({2});
    g.add_term(Partition({2}), -1);
    CHECK(g.is_zero());
}

TEST_CASE("multiplication in the stable basis") {
    // p#_1 p#_1 = p#_{1,1} + p#_1.
    ShiftedSymFn sq = multiply(p_sharp({1}), p_sharp({1}));
    CHECK(sq.coefficient(Partition({1, 1})) == 1);
    CHECK(sq.coefficient(Partition({1})) == 1);
    CHECK(sq.coeffs().size() == 2);

    // p#_2 p#_1 = p#_{2,1} + 2 p#_2.
    ShiftedSymFn p21 = multiply(p_sharp({2}), p_sharp({1}));
    CHECK(p21.coefficient(Partition({2, 1})) == 1);
    CHECK(p21.coefficient(Partition({2})) == 2);
    CHECK(p21.coeffs().size() == 2);

    // p#_2 p#_2 = p#_{2,2} + 4 p#_3 + 2 p#_{1,1}.
    ShiftedSymFn p22 = multiply(p_sharp({2}), p_sharp({2}));
    CHECK(p22.coefficient(Partition({2, 2})) == 1);
    CHECK(p22.coefficient(Partition({3})) == 4);
    CHECK(p22.coefficient(Partition({1, 1})) == 2);
    CHECK(p22.coeffs().size() == 3);

    // Multiplication agrees with pointwise evaluation well beyond the
    // interpolation window.
    ShiftedSymFn f = p_sharp({2}) + p_sharp({1}).scaled(Rational(-1, 3));
    ShiftedSymFn g = p_sharp({3}) + ShiftedSymFn::constant(2);
    ShiftedSymFn prod = multiply(f, g);
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(eval(prod, lam) == eval(f, lam) * eval(g, lam));

    CHECK(multiply(ShiftedSymFn::zero(), f).is_zero());
    CHECK(multiply(f, ShiftedSymFn::constant(3)) == f.scaled(3));
}

TEST_CASE("interpolation recovers coefficients and flags bad data") {
    ShiftedSymFn f = p_sharp({2, 1}).scaled(Rational(5, 3)) - p_sharp({2});
    std::map<Partition, Rational, CanonicalLess> values;
    for (int n = 0; n <= 3; ++n)
        for (const Partition& lam : partitions_of(n)) values[lam] = eval(f, lam);
    CHECK(interpolate(values, 3) == f);

    // A consistent extra value of larger size is accepted.
    values[Partition({4})] = eval(f, Partition({4}));
    CHECK(interpolate(values, 3) == f);

    // An inconsistent extra value is rejected.
    values[Partition({4})] += 1;
    CHECK_THROWS_AS(interpolate(values, 3), InterpolationError);
    values.erase(Partition({4}));

    // Missing interior nodes are a usage error.
    values.erase(Partition({2, 1}));
    CHECK_THROWS_AS(interpolate(values, 3), DomainError);
}

TEST_CASE("shifted Schur expansion in p#") {
    // s*_1 = p#_1; s*_2 = p#_2/2 + p#_{1,1}/2; s*_{1,1} = -p#_2/2 + p#_{1,1}/2.
    CHECK(s_star_to_p(Partition({1})) == p_sharp({1}));
    ShiftedSymFn s2 = s_star_to_p(Partition({2}));
    CHECK(s2.coefficient(Partition({2})) == Rational(1, 2));
    CHECK(s2.coefficient(Partition({1, 1})) == Rational(1, 2));
    ShiftedSymFn s11 = s_star_to_p(Partition({1, 1}));
    CHECK(s11.coefficient(Partition({2})) == Rational(-1, 2));
    CHECK(s11.coefficient(Partition({1, 1})) == Rational(1, 2));
    CHECK(s_star_to_p(Partition()) == ShiftedSymFn::constant(1));

    // p#_{1,1} = s*_2 + s*_{1,1}.
    CHECK(s2 + s11 == p_sharp({1, 1}));

    // Round trip through the s* coordinates.
    ShiftedSymFn f = p_sharp({3, 1}).scaled(Rational(2, 7)) + p_sharp({2}) -
                     ShiftedSymFn::constant(4);
    ShiftedSymFn back = ShiftedSymFn::zero();
    for (const auto& [mu, b] : p_to_s_star(f)) back = back + s_star_to_p(mu).scaled(b);
    CHECK(back == f);
}

TEST_CASE("vanishing characterization of shifted Schur functions") {
    for (int m = 0; m <= 5; ++m)
        for (const Partition& mu : partitions_of(m)) {
            ShiftedSymFn s = s_star_to_p(mu);
            for (int n = 0; n <= m; ++n)
                for (const Partition& lam : partitions_of(n)) {
                    Rational want = (lam == mu) ? Rational(hook_product(mu)) : Rational(0);
                    CHECK(eval(s, lam) == want);
                }
        }
}

TEST_CASE("determinant evaluation matches the character expansion") {
    for (int m = 0; m <= 4; ++m)
        for (const Partition& mu : partitions_of(m)) {
            ShiftedSymFn s = s_star_to_p(mu);
            for (int n = 0; n <= 5; ++n)
                for (const Partition& lam : partitions_of(n))
                    CHECK(s_star_det_eval(mu, det_args(lam, mu.length())) ==
                          eval(s, lam));
        }

    // Appending zeros never changes the value.
    std::vector<Rational> x = det_args(Partition({3, 1}), 3);
    Rational base = s_star_det_eval(Partition({2, 1}), x);
    x.push_back(0);
    x.push_back(0);
    CHECK(s_star_det_eval(Partition({2, 1}), x) == base);

    // Coincident shifted arguments make the denominator vanish.
    CHECK_THROWS_AS(s_star_det_eval(Partition({2}), {Rational(2), Rational(3)}),
                    DeterminantError);
}

TEST_CASE("elementary and complete shifted functions") {
    CHECK(e_star(0) == ShiftedSymFn::constant(1));
    CHECK(h_star(0) == ShiftedSymFn::constant(1));
    CHECK(e_star(1) == p_sharp({1}));
    CHECK(h_star(1) == p_sharp({1}));
    CHECK(e_star(2) == s_star_to_p(Partition({1, 1})));
    CHECK(h_star(2) == s_star_to_p(Partition({2})));

    // h*_2((2)) = 2 and e*_2((2)) = 0 by the vanishing characterization.
    CHECK(eval(h_star(2), Partition({2})) == 2);
    CHECK(eval(e_star(2), Partition({2})) == 0);

    // Terminating sums agree with the s* expansions everywhere small.
    for (int k = 0; k <= 5; ++k) {
        ShiftedSymFn e = e_star(k);
        ShiftedSymFn h = h_star(k);
        for (int n = 0; n <= 6; ++n)
            for (const Partition& lam : partitions_of(n)) {
                CHECK(e_star_direct_eval(k, lam) == eval(e, lam));
                CHECK(h_star_direct_eval(k, lam) == eval(h, lam));
            }
    }
}

TEST_CASE("omega_bar is the conjugation involution") {
    // Defining property: [omega_bar f](lambda) = f(lambda').
    ShiftedSymFn f = p_sharp({3}) + p_sharp({2, 1}).scaled(Rational(1, 2)) -
                     ShiftedSymFn::constant(1);
    ShiftedSymFn w = omega_bar(f);
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(eval(w, lam) == eval(f, conjugate(lam)));

    // Sign rule on the p# basis and involutivity.
    for (int k = 1; k <= 5; ++k) {
        ShiftedSymFn p = ShiftedSymFn::p_shift(Partition({k}));
        Rational sign = (k % 2 == 0) ? -1 : 1;
        CHECK(omega_bar(p) == p.scaled(sign));
    }
    CHECK(omega_bar(w) == f);

    // s* goes to the conjugate shape; e* and h* swap.
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(omega_bar(s_star_to_p(mu)) == s_star_to_p(conjugate(mu)));
    for (int k = 0; k <= 5; ++k) {
        CHECK(omega_bar(e_star(k)) == h_star(k));
        CHECK(omega_bar(h_star(k)) == e_star(k));
    }

    // omega_bar is an algebra map.
    ShiftedSymFn g = p_sharp({2}) + ShiftedSymFn::constant(3);
    CHECK(omega_bar(multiply(f, g)) == multiply(omega_bar(f), omega_bar(g)));
}
