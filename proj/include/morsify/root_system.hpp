#pragma once

#include "morsify/bivar.hpp"

namespace morsify {

// The factorization data of a right-reduced real series: pairwise distinct
// real Newton-Puiseux roots (stored sorted by the real total order) and
// non-real roots with multiplicities, closed under conjugation. Every root
// vanishes at x = 0.
class RootSystem {
public:
    struct ComplexRoot {
        PuiseuxPoly series;
        int multiplicity = 1;
    };

    // Validates and sorts. Throws non_positive_valuation_error,
    // not_right_reduced_error, not_rational_error or
    // conjugation_closure_error.
    RootSystem(std::shared_ptr<const NumberField> field, std::vector<PuiseuxPoly> real_roots,
               std::vector<ComplexRoot> complex_roots);

    const std::shared_ptr<const NumberField>& field() const { return field_; }
    const std::vector<PuiseuxPoly>& real_roots() const { return real_roots_; }
    const std::vector<ComplexRoot>& complex_roots() const { return complex_roots_; }
    int n_real() const { return static_cast<int>(real_roots_.size()); }

private:
    std::shared_ptr<const NumberField> field_;
    std::vector<PuiseuxPoly> real_roots_;
    std::vector<ComplexRoot> complex_roots_;
};

// Expands u * prod (y - xi_i) * prod (y - eta_l)^mult over all listed
// complex roots. The unit's value at the origin must be a non-zero
// rational (unit_vanishes_error otherwise) and every coefficient of the
// result must be rational (non_real_product_error otherwise).
BivarPoly product_from_roots(const RootSystem& rs, const BivarPoly& unit);

}  // namespace morsify
