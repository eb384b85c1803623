#include "hcenter/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "hcenter/errors.hpp"

namespace hcenter {

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool consume_word(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) == 0) {
            i += w.size();
            return true;
        }
        return false;
    }
    long parse_uint() {
        skip_ws();
        if (!peek_digit()) throw DomainError("expected a number at position " + std::to_string(i));
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000L) throw DomainError("number too large");
            ++i;
        }
        return v;
    }
    Rational parse_rational() {
        long num = parse_uint();
        if (consume('/')) {
            long den = parse_uint();
            if (den == 0) throw DomainError("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }
    Partition parse_bracket_partition() {
        if (!consume('[')) throw DomainError("expected '['");
        std::vector<int> parts;
        if (!consume(']')) {
            for (;;) {
                parts.push_back(static_cast<int>(parse_uint()));
                if (consume(']')) break;
                if (!consume(',')) throw DomainError("expected ',' or ']' in partition");
            }
        }
        return Partition(parts);
    }
};

}  // namespace

ShiftedSymFn parse_shifted(const std::string& text) {
    Scanner sc{text};
    ShiftedSymFn result = ShiftedSymFn::zero();
    bool first = true;
    while (!sc.done()) {
        Rational sign(1);
        if (sc.consume('-')) {
            sign = -1;
        } else if (sc.consume('+')) {
            // explicit plus
        } else if (!first) {
            throw DomainError("expected '+' or '-' between terms");
        }
        first = false;
        Rational coef(1);
        bool have_coef = false;
        if (sc.peek_digit()) {
            coef = sc.parse_rational();
            have_coef = true;
            sc.consume('*');
        }
        if (sc.consume_word("p#")) {
            Partition mu = sc.parse_bracket_partition();
            result.add_term(mu, sign * coef);
        } else if (sc.consume_word("s*")) {
            Partition mu = sc.parse_bracket_partition();
            result = result + s_star_to_p(mu).scaled(sign * coef);
        } else if (have_coef) {
            result.add_term(Partition(), sign * coef);
        } else {
            throw DomainError("expected a coefficient, p#[...] or s*[...] at position " +
                              std::to_string(sc.i));
        }
    }
    return result;
}

namespace {

std::string render_terms(const std::map<Partition, Rational, CanonicalLess>& coeffs,
                         const std::string& basis) {
    if (coeffs.empty()) return "0";
    // Map order is grade-ascending with reverse-lex inside a grade; the
    // rendering walks grades in descending order keeping the inner order.
    std::vector<std::pair<Partition, Rational>> items(coeffs.begin(), coeffs.end());
    std::vector<std::pair<Partition, Rational>> ordered;
    int i = static_cast<int>(items.size());
    while (i > 0) {
        int j = i;
        while (j > 0 && items[j - 1].first.size() == items[i - 1].first.size()) --j;
        for (int k = j; k < i; ++k) ordered.push_back(items[k]);
        i = j;
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : ordered) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const Rational a = neg ? Rational(-c) : c;
        if (mu.empty()) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << " ";
            out << basis << "[";
            for (int k = 0; k < mu.length(); ++k) {
                if (k) out << ",";
                out << mu.parts()[k];
            }
            out << "]";
        }
    }
    return out.str();
}

}  // namespace

std::string render_pshift(const ShiftedSymFn& f) { return render_terms(f.coeffs(), "p#"); }

std::string render_sstar(const std::map<Partition, Rational, CanonicalLess>& coeffs) {
    return render_terms(coeffs, "s*");
}

Partition parse_partition_list(const std::string& text) {
    std::vector<int> parts;
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) return Partition();
    for (;;) {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw DomainError("malformed partition: " + text);
        parts.push_back(std::stoi(text.substr(start, i - start)));
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        if (text[i] != ',') throw DomainError("malformed partition: " + text);
        ++i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    return Partition(parts);
}

std::string render_partition_list(const Partition& p) {
    std::ostringstream out;
    for (int k = 0; k < p.length(); ++k) {
        if (k) out << ",";
        out << p.parts()[k];
    }
    return out.str();
}

}  // namespace hcenter
