#pragma once

#include <map>
#include <string>

#include "hcenter/shifted.hpp"

namespace hcenter {

// Parses expressions like "3/2 p#[2,2] - p#[3] + 1" or "s*[2,1]": terms
// are an optional rational coefficient followed by an optional basis
// element p#[...] or s*[...], joined by + and -; whitespace is
// insignificant. s* terms are expanded into the p# basis. Throws
// DomainError on malformed input.
ShiftedSymFn parse_shifted(const std::string& text);

// Renders in the p# basis: grades descending, reverse-lex within a grade,
// unit coefficients omitted, the constant term bare; zero renders as "0".
std::string render_pshift(const ShiftedSymFn& f);

// Renders s*-basis coefficients (as produced by p_to_s_star) in the same
// layout with s*[...] terms.
std::string render_sstar(const std::map<Partition, Rational, CanonicalLess>& coeffs);

// Comma-separated partition text: "4,2,1"; the empty string is the empty
// partition.
Partition parse_partition_list(const std::string& text);
std::string render_partition_list(const Partition& p);

}  // namespace hcenter
