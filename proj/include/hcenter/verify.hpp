#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hcenter/diagrams.hpp"

namespace hcenter {

// One relation or identity checked over every basis tuple of its boundary
// bimodule (or exactly, for identities of shifted symmetric functions).
struct CheckResult {
    std::string name;
    bool passed = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Suites: local-relations (inverse crossings, double crossing, braid move,
// curls, circle values, dot slides, bubble moves), dot-slides, bubbles,
// curl-recursion, characterization, iso-phi, involutions.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, int max_n, unsigned seed);

// A rational combination of slice words with a common boundary.
struct WordTerm {
    Rational coef;
    std::vector<Slice> word;
};

// True when the two combinations define the same bimodule map: both sides
// are applied to every basis tuple of the bottom boundary at the given
// base and the resulting states are compared term by term.
bool words_equal(const SignSequence& bottom, int base, const std::vector<WordTerm>& lhs,
                 const std::vector<WordTerm>& rhs);

}  // namespace hcenter
