#include "hcenter/rational.hpp"

#include "hcenter/errors.hpp"

namespace hcenter {

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational falling_factorial(const Rational& x, long k) {
    if (k < 0) throw DomainError("falling factorial with negative length");
    Rational r = 1;
    for (long j = 0; j < k; ++j) r *= x - j;
    return r;
}

Integer falling_factorial(const Integer& n, long k) {
    if (k < 0) throw DomainError("falling factorial with negative length");
    Integer r = 1;
    for (long j = 0; j < k; ++j) r *= n - j;
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    // mpq accepts whitespace and exotic bases; insist on plain decimal forms.
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    if (body[0] == '-' || body[0] == '+') body = body.substr(1);
    auto slash = body.find('/');
    bool ok = slash == std::string::npos
                  ? digits(body)
                  : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok) throw DomainError("malformed rational literal: " + text);
    Rational r;
    if (r.set_str(text, 10) != 0) throw DomainError("malformed rational literal: " + text);
    if (r.get_den() == 0) throw DomainError("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

}  // namespace hcenter
