#pragma once

#include "morsify/morse.hpp"

namespace morsify {

// Parsed form of a problem file. The field defaults to Q when no field
// line is present; the unit defaults to the constant 1.
struct ProblemSpec {
    std::shared_ptr<const NumberField> field;
    bool field_declared = false;
    BivarPoly unit;
    std::vector<PuiseuxPoly> real_roots;
    std::vector<RootSystem::ComplexRoot> complex_roots;
    AnalyzeOptions options;
};

// Parses the line-oriented problem format:
//
//   # comment
//   field t: minpoly = t^2+t+1; conj = -1-t
//   unit = 3
//   real_root = -1*x^(1/2) + 2*x^3
//   complex_root = t*x^(2/3); mult = 1
//
// Terms multiply rational literals, t-polynomials (parenthesized when
// they are sums) and x powers; exponents need parentheses unless they are
// integers; y powers are allowed in the unit only. Throws syntax_error
// with line/column/expectation, field_required_error when t is used
// without a field line, and the root-system validation errors
// (conjugation_closure_error, non_positive_valuation_error,
// not_right_reduced_error).
ProblemSpec parse_input(const std::string& text);

// The validated root system of a parsed problem.
RootSystem to_root_system(const ProblemSpec& spec);

}  // namespace morsify
