#pragma once

#include <gmpxx.h>

#include <string>

namespace hcenter {

// All coefficients in this library are exact rationals; GMP keeps them in
// canonical form (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(long n);

// Falling factorial x(x-1)...(x-k+1); k = 0 gives 1.
Rational falling_factorial(const Rational& x, long k);
Integer falling_factorial(const Integer& n, long k);

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Accepts "p" and "p/q" (optional sign); rejects anything else.
Rational rational_from_string(const std::string& text);

}  // namespace hcenter
