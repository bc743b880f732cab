#include "morsify/root_system.hpp"

#include <algorithm>

namespace morsify {

namespace {

void check_vanishes_at_origin(const PuiseuxPoly& root, const char* what) {
    Valuation v = root.val();
    if (!v.is_infinite() && v.finite().sign() <= 0)
        throw non_positive_valuation_error(std::string(what) + " " + root.to_string() +
                                           " does not vanish at x = 0");
}

}  // namespace

RootSystem::RootSystem(std::shared_ptr<const NumberField> field,
                       std::vector<PuiseuxPoly> real_roots,
                       std::vector<ComplexRoot> complex_roots)
    : field_(std::move(field)),
      real_roots_(std::move(real_roots)),
      complex_roots_(std::move(complex_roots)) {
    if (real_roots_.empty()) throw error("a root system needs at least one real root");

    for (const auto& xi : real_roots_) {
        check_vanishes_at_origin(xi, "real root");
        if (!xi.has_rational_coeffs())
            throw not_rational_error("real root " + xi.to_string() +
                                     " has a non-rational coefficient");
    }
    for (size_t i = 0; i < real_roots_.size(); ++i)
        for (size_t j = i + 1; j < real_roots_.size(); ++j)
            if (real_roots_[i] == real_roots_[j])
                throw not_right_reduced_error("repeated real root " + real_roots_[i].to_string());

    std::sort(real_roots_.begin(), real_roots_.end(),
              [](const PuiseuxPoly& a, const PuiseuxPoly& b) { return real_less(a, b); });

    for (const auto& [eta, mult] : complex_roots_) {
        check_vanishes_at_origin(eta, "complex root");
        if (mult < 1) throw error("complex root multiplicity must be positive");
        if (eta.conj() == eta)
            throw conjugation_closure_error("complex root " + eta.to_string() +
                                            " equals its own conjugate");
    }
    // The complex roots form a multiset; listing a series twice is the
    // same as raising its multiplicity.
    std::vector<ComplexRoot> merged;
    for (auto& cr : complex_roots_) {
        bool found = false;
        for (auto& m : merged)
            if (m.series == cr.series) {
                m.multiplicity += cr.multiplicity;
                found = true;
                break;
            }
        if (!found) merged.push_back(std::move(cr));
    }
    complex_roots_ = std::move(merged);
    // Pair every complex root with an unmatched conjugate of equal
    // multiplicity.
    std::vector<bool> matched(complex_roots_.size(), false);
    for (size_t i = 0; i < complex_roots_.size(); ++i) {
        if (matched[i]) continue;
        PuiseuxPoly want = complex_roots_[i].series.conj();
        bool found = false;
        for (size_t j = i + 1; j < complex_roots_.size(); ++j) {
            if (matched[j]) continue;
            if (complex_roots_[j].series == want &&
                complex_roots_[j].multiplicity == complex_roots_[i].multiplicity) {
                matched[i] = matched[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw conjugation_closure_error("complex root " + complex_roots_[i].series.to_string() +
                                            " is missing its conjugate");
    }
}

BivarPoly product_from_roots(const RootSystem& rs, const BivarPoly& unit) {
    if (unit.value_at_origin().is_zero())
        throw unit_vanishes_error("unit vanishes at the origin");

    BivarPoly f = unit;
    for (const auto& xi : rs.real_roots()) f = f * BivarPoly::linear_factor(xi);
    for (const auto& [eta, mult] : rs.complex_roots())
        f = f * BivarPoly::linear_factor(eta).pow(static_cast<unsigned>(mult));

    for (const auto& c : f.y_coeffs())
        for (const auto& [e, coeff] : c.terms())
            if (!coeff.is_rational())
                throw non_real_product_error("expanded product has non-rational coefficient " +
                                             coeff.to_string() + " on x^(" + e.to_string() + ")");
    return f;
}

}  // namespace morsify
