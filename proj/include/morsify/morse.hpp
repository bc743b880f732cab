#pragma once

#include <optional>

#include "morsify/contact_tree.hpp"

namespace morsify {

// The series S_r = F(xi_{r+1}) - F(xi_r) of a consecutive pair of real
// roots, together with its initial data. Indices are 0-based: areas[r]
// joins the roots at sorted positions r and r+1.
struct AreaSeries {
    int index = 0;
    PuiseuxPoly series;
    Rational sigma_val;       // val(S_r)
    Rational initial_coeff;   // lc(S_r), non-zero rational
    int tree_vertex = -1;     // wedge of the two roots in the real tree
};

// The n-1 area series of a primitive F; throws
// equal_critical_value_series_error when some S_r vanishes identically.
std::vector<AreaSeries> area_series(const BivarPoly& F, const RootSystem& rs);

// Partial sums of the initial coefficients attached, via the wedge map,
// to the consecutive outgoing edges at one internal vertex:
// [0, s_i(1), s_i(1)+s_i(2), ...], one entry per outgoing edge.
struct IntegrationTable {
    int vertex = -1;
    std::vector<Rational> partial_sums;
};

IntegrationTable integration_table(const ContactTree& tree, const std::vector<AreaSeries>& areas,
                                   int vertex);
// Tables for every internal vertex of the real subtree, in preorder.
std::vector<IntegrationTable> integration_tables(const ContactTree& tree,
                                                 const std::vector<AreaSeries>& areas);

struct InjectivityWitness {
    int vertex = -1;
    int entry_a = -1;  // colliding partial-sum indices, 0-based, a < b;
    int entry_b = -1;  // the consecutive sum s over edges (a+1 .. b) is zero
};

struct InjectivityResult {
    bool pass = false;
    std::optional<InjectivityWitness> witness;
};

// Pass iff every table has pairwise distinct entries. On failure reports
// the first collision in preorder.
InjectivityResult check_injectivity(const std::vector<IntegrationTable>& tables);

// Rank permutation of a Morse critical graph: target_ranks[i] is the
// 1-based rank of the critical value of the (i+1)-th critical point; the
// source order is the identity.
struct Snake {
    std::vector<int> target_ranks;

    bool operator==(const Snake& o) const { return target_ranks == o.target_ranks; }
    std::string to_string() const;
};

// The real tree re-planarized by increasing discrete-integration values,
// with the integrated exponent as its vertex function. Requires the
// injectivity condition (injectivity_required_error otherwise).
ContactTree integrated_tree(const ContactTree& real_tree,
                            const std::vector<IntegrationTable>& tables,
                            const std::map<int, Rational>& sigma_by_vertex);

// The snake read off an integrated tree's leaf order.
Snake make_snake(const ContactTree& integrated);

// Sign of F(xi_j) - F(xi_i) for small x > 0 (0-based i < j), from the
// consecutive sum of initial coefficients between the two edges at the
// wedge. Throws indeterminate_sign_error when the sum vanishes. Usable
// even when the global injectivity condition fails.
int sign_of_difference(int i, int j, const ContactTree& real_tree,
                       const std::vector<IntegrationTable>& tables);

// The critical value series delta_i = F(xi_i), in the real order of the
// xi_i.
std::vector<PuiseuxPoly> discriminant_roots(const BivarPoly& F, const RootSystem& rs);

// Contact tree of the discriminant roots; throws
// equal_discriminant_roots_error when two coincide.
ContactTree discriminant_tree(const BivarPoly& F, const RootSystem& rs);

// Whether the unique label-respecting rooted-tree map between the two
// planar trees exists: wedge-wise equality of the integrated exponents
// with the discriminant exponents, plus matching leaf orders.
bool check_theorem_b(const ContactTree& integrated, const ContactTree& discriminant);

struct PairSign {
    int i = 0;  // 0-based root indices, i < j
    int j = 0;
    std::optional<int> sign;  // nullopt: indeterminate
};

struct AnalyzeOptions {
    bool run_oracle = false;
};

struct OracleResult;  // oracle.hpp

// Everything the analysis produces for one root system.
struct MorsificationReport {
    RootSystem roots;
    BivarPoly f;  // reconstructed product
    BivarPoly F;  // primitive
    ContactTree embedded;   // complex tree with the real subtree marked
    ContactTree real_tree;  // contact tree of the real roots alone
    std::vector<AreaSeries> areas;
    std::map<int, Rational> sigma_by_vertex;  // real-tree internal vertices
    std::vector<IntegrationTable> tables;
    InjectivityResult injectivity;
    std::vector<PairSign> pair_signs;  // populated when injectivity fails
    std::optional<ContactTree> integrated;
    std::optional<std::vector<PuiseuxPoly>> deltas;
    std::optional<ContactTree> discriminant;
    std::optional<Snake> snake;
    std::optional<bool> theorem_b;
    std::shared_ptr<OracleResult> oracle;  // set when the oracle ran
    std::optional<bool> oracle_agrees;
};

// Full pipeline: reconstruct f, integrate, build trees, area series,
// injectivity, and (when it holds) the integrated tree, snake,
// discriminant tree and Theorem B comparison. The valuation of every S_r
// is cross-checked against the integrated exponent read off the embedded
// tree; disagreement raises internal_check_error.
MorsificationReport analyze(const RootSystem& rs, const BivarPoly& unit,
                            const AnalyzeOptions& options = {});

}  // namespace morsify
