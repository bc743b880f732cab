#include "morsify/morse.hpp"

#include <algorithm>

#include "morsify/oracle.hpp"

namespace morsify {

std::vector<AreaSeries> area_series(const BivarPoly& F, const RootSystem& rs) {
    const auto& roots = rs.real_roots();
    if (roots.size() < 2) throw error("area series need at least two real roots");
    std::vector<AreaSeries> areas;
    areas.reserve(roots.size() - 1);
    PuiseuxPoly prev = F.compose(roots[0]);
    for (size_t r = 1; r < roots.size(); ++r) {
        PuiseuxPoly next = F.compose(roots[r]);
        PuiseuxPoly s = next - prev;
        if (s.is_zero())
            throw equal_critical_value_series_error(
                "critical value series of roots " + std::to_string(r) + " and " +
                std::to_string(r + 1) + " coincide");
        Rational sigma_val = s.val().finite();
        Rational initial = s.lc().rational_value();
        areas.push_back(AreaSeries{static_cast<int>(r) - 1, std::move(s), std::move(sigma_val),
                                   std::move(initial), -1});
        prev = std::move(next);
    }
    return areas;
}

IntegrationTable integration_table(const ContactTree& tree, const std::vector<AreaSeries>& areas,
                                   int vertex) {
    auto groups = tree.real_edge_groups(vertex);
    if (groups.size() < 2) throw error("integration table requested at a non-branching vertex");
    IntegrationTable table;
    table.vertex = vertex;
    table.partial_sums.reserve(groups.size());
    table.partial_sums.push_back(Rational(0));
    for (size_t k = 0; k + 1 < groups.size(); ++k) {
        // The wedge map sends the leaf interval {iota(k), iota(k)+1} to the
        // edge interval {k, k+1}; iota(k) is the last leaf rank of group k.
        int leaf_rank = groups[k].leaf_hi;
        table.partial_sums.push_back(table.partial_sums.back() +
                                     areas[leaf_rank].initial_coeff);
    }
    return table;
}

std::vector<IntegrationTable> integration_tables(const ContactTree& tree,
                                                 const std::vector<AreaSeries>& areas) {
    std::vector<IntegrationTable> tables;
    for (int v : tree.real_internal_vertices()) tables.push_back(integration_table(tree, areas, v));
    return tables;
}

InjectivityResult check_injectivity(const std::vector<IntegrationTable>& tables) {
    for (const auto& table : tables) {
        const auto& sums = table.partial_sums;
        for (size_t a = 0; a < sums.size(); ++a)
            for (size_t b = a + 1; b < sums.size(); ++b)
                if (sums[a] == sums[b]) {
                    InjectivityResult res;
                    res.pass = false;
                    res.witness = InjectivityWitness{table.vertex, static_cast<int>(a),
                                                     static_cast<int>(b)};
                    return res;
                }
    }
    return {true, std::nullopt};
}

std::string Snake::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < target_ranks.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(target_ranks[i]);
    }
    return out + ")";
}

namespace {

const IntegrationTable& table_at(const std::vector<IntegrationTable>& tables, int vertex) {
    for (const auto& t : tables)
        if (t.vertex == vertex) return t;
    throw error("no integration table for vertex " + std::to_string(vertex));
}

}  // namespace

ContactTree integrated_tree(const ContactTree& real_tree,
                            const std::vector<IntegrationTable>& tables,
                            const std::map<int, Rational>& sigma_by_vertex) {
    if (!check_injectivity(tables).pass)
        throw injectivity_required_error("integrated planar structure needs the injectivity condition");

    std::map<int, std::vector<int>> new_children;
    for (const auto& table : tables) {
        auto groups = real_tree.real_edge_groups(table.vertex);
        std::vector<size_t> perm(groups.size());
        for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
            return table.partial_sums[a] < table.partial_sums[b];
        });
        std::vector<int> children;
        children.reserve(groups.size());
        for (size_t k : perm) children.push_back(groups[k].child);
        new_children.emplace(table.vertex, std::move(children));
    }

    std::vector<Valuation> exponents;
    exponents.reserve(real_tree.vertex_count());
    for (int v = 0; v < real_tree.vertex_count(); ++v) {
        if (real_tree.vertex(v).leaf_index >= 0)
            exponents.push_back(Valuation::infinity());
        else if (v == real_tree.root())
            exponents.push_back(Valuation(0));
        else
            exponents.push_back(Valuation(sigma_by_vertex.at(v)));
    }
    return real_tree.reordered(new_children, exponents);
}

Snake make_snake(const ContactTree& integrated) {
    const auto& order = integrated.planar_leaf_order();
    Snake snake;
    snake.target_ranks.assign(order.size(), 0);
    for (size_t rank = 0; rank < order.size(); ++rank)
        snake.target_ranks[order[rank]] = static_cast<int>(rank) + 1;
    return snake;
}

int sign_of_difference(int i, int j, const ContactTree& real_tree,
                       const std::vector<IntegrationTable>& tables) {
    if (!(0 <= i && i < j && j < real_tree.n_real_leaves()))
        throw error("sign_of_difference needs root indices i < j");
    int p = real_tree.wedge(real_tree.real_leaf_vertex(i), real_tree.real_leaf_vertex(j));
    auto groups = real_tree.real_edge_groups(p);
    int ri = real_tree.rank_of_leaf(i), rj = real_tree.rank_of_leaf(j);
    int gi = -1, gj = -1;
    for (size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].leaf_lo <= ri && ri <= groups[k].leaf_hi) gi = static_cast<int>(k);
        if (groups[k].leaf_lo <= rj && rj <= groups[k].leaf_hi) gj = static_cast<int>(k);
    }
    const auto& sums = table_at(tables, p).partial_sums;
    Rational sum = sums[gj] - sums[gi];
    if (sum.is_zero())
        throw indeterminate_sign_error("consecutive initial-coefficient sum vanishes for roots " +
                                       std::to_string(i + 1) + " and " + std::to_string(j + 1));
    return sum.sign();
}

std::vector<PuiseuxPoly> discriminant_roots(const BivarPoly& F, const RootSystem& rs) {
    std::vector<PuiseuxPoly> deltas;
    deltas.reserve(rs.real_roots().size());
    for (const auto& xi : rs.real_roots()) deltas.push_back(F.compose(xi));
    return deltas;
}

ContactTree discriminant_tree(const BivarPoly& F, const RootSystem& rs) {
    auto deltas = discriminant_roots(F, rs);
    for (size_t i = 0; i < deltas.size(); ++i)
        for (size_t j = i + 1; j < deltas.size(); ++j)
            if (deltas[i] == deltas[j])
                throw equal_discriminant_roots_error("discriminant roots " + std::to_string(i + 1) +
                                                     " and " + std::to_string(j + 1) + " coincide");
    return build_contact_tree(deltas);
}

bool check_theorem_b(const ContactTree& integrated, const ContactTree& discriminant) {
    const int n = integrated.n_real_leaves();
    if (discriminant.n_real_leaves() != n) return false;
    if (integrated.planar_leaf_order() != discriminant.planar_leaf_order()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int p = integrated.wedge(integrated.real_leaf_vertex(i), integrated.real_leaf_vertex(j));
            int q = discriminant.wedge(discriminant.real_leaf_vertex(i),
                                       discriminant.real_leaf_vertex(j));
            if (integrated.vertex(p).exponent != discriminant.vertex(q).exponent) return false;
        }
    return true;
}

MorsificationReport analyze(const RootSystem& rs, const BivarPoly& unit,
                            const AnalyzeOptions& options) {
    BivarPoly f = product_from_roots(rs, unit);
    BivarPoly F = f.integrate_y();
    ContactTree embedded = build_embedded_trees(rs);
    ContactTree real_tree = build_contact_tree(rs.real_roots());

    MorsificationReport report{rs, std::move(f), std::move(F), std::move(embedded),
                               std::move(real_tree)};
    const int n = rs.n_real();

    // Integrated exponents of the internal vertices of the real subtree,
    // read off the embedded tree.
    for (int v : report.real_tree.real_internal_vertices()) {
        auto groups = report.real_tree.real_edge_groups(v);
        int a = report.real_tree.leaf_at_rank(groups.front().leaf_hi);
        int b = report.real_tree.leaf_at_rank(groups.back().leaf_lo);
        int p = report.embedded.wedge(report.embedded.real_leaf_vertex(a),
                                      report.embedded.real_leaf_vertex(b));
        report.sigma_by_vertex.emplace(v, sigma(report.embedded, p));
    }

    if (n >= 2) {
        report.areas = area_series(report.F, rs);
        for (auto& area : report.areas) {
            int v = report.real_tree.wedge(report.real_tree.real_leaf_vertex(area.index),
                                           report.real_tree.real_leaf_vertex(area.index + 1));
            area.tree_vertex = v;
            // Two independent computation paths for the same quantity.
            if (report.sigma_by_vertex.at(v) != area.sigma_val)
                throw internal_check_error("val(S_" + std::to_string(area.index + 1) +
                                           ") disagrees with the integrated exponent");
        }
        report.tables = integration_tables(report.real_tree, report.areas);
    }
    report.injectivity = check_injectivity(report.tables);

    if (report.injectivity.pass) {
        report.integrated = integrated_tree(report.real_tree, report.tables, report.sigma_by_vertex);
        report.deltas = discriminant_roots(report.F, rs);
        report.discriminant = discriminant_tree(report.F, rs);
        report.snake = make_snake(*report.integrated);
        report.theorem_b = check_theorem_b(*report.integrated, *report.discriminant);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                PairSign ps{i, j, std::nullopt};
                try {
                    ps.sign = sign_of_difference(i, j, report.real_tree, report.tables);
                } catch (const indeterminate_sign_error&) {
                }
                report.pair_signs.push_back(ps);
            }
    }

    if (options.run_oracle && n >= 2) {
        report.oracle = std::make_shared<OracleResult>(numeric_snake(report.F, rs));
        if (report.snake) report.oracle_agrees = cross_check(*report.snake, *report.oracle);
    }
    return report;
}

}  // namespace morsify
