#include "morsify/report.hpp"

#include <json.hpp>

#include "morsify/oracle.hpp"

namespace morsify {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) { return r.to_string(); }

ordered_json field_element_json(const FieldElement& e) {
    if (e.is_rational()) return e.rational_value().to_string();
    ordered_json coords = ordered_json::array();
    for (const auto& c : e.coeffs()) coords.push_back(c.to_string());
    return coords;
}

ordered_json puiseux_json(const PuiseuxPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e.to_string(), field_element_json(c)});
    return terms;
}

ordered_json tree_json(const ContactTree& tree) {
    ordered_json j;
    ordered_json parents = ordered_json::array();
    ordered_json exponents = ordered_json::array();
    ordered_json children = ordered_json::array();
    for (int v = 0; v < tree.vertex_count(); ++v) {
        const auto& vx = tree.vertex(v);
        parents.push_back(vx.parent);
        exponents.push_back(vx.exponent.to_string());
        children.push_back(vx.children);
    }
    j["parents"] = std::move(parents);
    j["exponents"] = std::move(exponents);
    j["children"] = std::move(children);
    ordered_json leaves = ordered_json::array();
    for (int i = 0; i < tree.n_real_leaves(); ++i) leaves.push_back(tree.real_leaf_vertex(i));
    j["real_leaf_vertices"] = std::move(leaves);
    ordered_json order = ordered_json::array();
    for (int label : tree.planar_leaf_order()) order.push_back(label + 1);
    j["planar_leaf_order"] = std::move(order);
    if (tree.n_complex_leaves() > 0) {
        ordered_json cplx = ordered_json::array();
        for (int l = 0; l < tree.n_complex_leaves(); ++l) {
            int v = tree.complex_leaf_vertex(l);
            cplx.push_back({{"vertex", v}, {"mult", tree.vertex(v).multiplicity}});
        }
        j["complex_leaf_vertices"] = std::move(cplx);
        ordered_json real_marker = ordered_json::array();
        for (int v = 0; v < tree.vertex_count(); ++v)
            real_marker.push_back(tree.vertex(v).on_real_path);
        j["real_marker"] = std::move(real_marker);
    }
    return j;
}

}  // namespace

std::string emit_report(const MorsificationReport& report) {
    ordered_json j;

    const auto& field = *report.roots.field();
    if (field.degree() > 1) {
        ordered_json fj;
        ordered_json minpoly = ordered_json::array();
        for (const auto& c : field.min_poly()) minpoly.push_back(c.to_string());
        ordered_json conj = ordered_json::array();
        for (const auto& c : field.conj_image()) conj.push_back(c.to_string());
        fj["minpoly"] = std::move(minpoly);
        fj["conj"] = std::move(conj);
        j["field"] = std::move(fj);
    }

    ordered_json roots;
    ordered_json real = ordered_json::array();
    for (const auto& xi : report.roots.real_roots()) real.push_back(puiseux_json(xi));
    roots["real"] = std::move(real);
    if (!report.roots.complex_roots().empty()) {
        ordered_json cplx = ordered_json::array();
        for (const auto& [eta, mult] : report.roots.complex_roots())
            cplx.push_back({{"terms", puiseux_json(eta)}, {"mult", mult}});
        roots["complex"] = std::move(cplx);
    }
    j["roots"] = std::move(roots);

    ordered_json trees;
    trees["real"] = tree_json(report.real_tree);
    trees["complex"] = tree_json(report.embedded);
    if (report.integrated) trees["integrated"] = tree_json(*report.integrated);
    if (report.discriminant) trees["discriminant"] = tree_json(*report.discriminant);
    j["trees"] = std::move(trees);

    ordered_json sigma = ordered_json::array();
    ordered_json s = ordered_json::array();
    for (const auto& area : report.areas) {
        sigma.push_back(area.sigma_val.to_string());
        s.push_back(area.initial_coeff.to_string());
    }
    j["sigma"] = std::move(sigma);
    j["s"] = std::move(s);

    ordered_json tables = ordered_json::array();
    for (const auto& table : report.tables) {
        ordered_json sums = ordered_json::array();
        for (const auto& v : table.partial_sums) sums.push_back(v.to_string());
        tables.push_back({{"vertex", table.vertex},
                          {"vertex_E", report.real_tree.vertex(table.vertex).exponent.to_string()},
                          {"sums", std::move(sums)}});
    }
    j["tables"] = std::move(tables);

    ordered_json inj;
    inj["pass"] = report.injectivity.pass;
    if (report.injectivity.witness) {
        const auto& w = *report.injectivity.witness;
        inj["vertex"] = w.vertex;
        inj["vertex_E"] = report.real_tree.vertex(w.vertex).exponent.to_string();
        // 1-based outgoing-edge indices bounding the vanishing sum
        inj["zero_sum_range"] = {w.entry_a + 1, w.entry_b + 1};
        inj["colliding_entries"] = {w.entry_a, w.entry_b};
    }
    j["injectivity"] = std::move(inj);

    if (!report.pair_signs.empty()) {
        ordered_json signs = ordered_json::array();
        for (const auto& ps : report.pair_signs) {
            ordered_json e;
            e["i"] = ps.i + 1;
            e["j"] = ps.j + 1;
            if (ps.sign)
                e["sign"] = *ps.sign;
            else
                e["sign"] = "indeterminate";
            signs.push_back(std::move(e));
        }
        j["signs"] = std::move(signs);
    }

    if (report.snake) j["snake"] = report.snake->target_ranks;
    if (report.theorem_b) j["theorem_b"] = *report.theorem_b;

    if (report.oracle) {
        const auto& o = *report.oracle;
        ordered_json oj;
        oj["snake"] = o.snake.target_ranks;
        oj["x0"] = o.x0_used.to_string();
        oj["j"] = o.j_used;
        oj["stabilization_count"] = o.stabilization_count;
        oj["samples"] = o.samples.size();
        ordered_json points = ordered_json::array();
        ordered_json values = ordered_json::array();
        for (const auto& sample : o.samples) {
            if (sample.j != o.j_used) continue;
            for (const auto& p : sample.points) points.push_back(p.to_string());
            for (const auto& v : sample.values) values.push_back(v.to_string());
        }
        oj["points"] = std::move(points);
        oj["values"] = std::move(values);
        if (report.oracle_agrees) oj["agrees"] = *report.oracle_agrees;
        j["oracle"] = std::move(oj);
    }

    return j.dump(2) + "\n";
}

std::string summarize_report(const MorsificationReport& report) {
    std::string out;
    const int n = report.roots.n_real();
    out += "real roots (in real order):\n";
    for (int i = 0; i < n; ++i)
        out += "  xi_" + std::to_string(i + 1) + " = " + report.roots.real_roots()[i].to_string() +
               "\n";
    for (size_t l = 0; l < report.roots.complex_roots().size(); ++l) {
        const auto& [eta, mult] = report.roots.complex_roots()[l];
        out += "  eta_" + std::to_string(l + 1) + " = " + eta.to_string();
        if (mult > 1) out += "  (mult " + std::to_string(mult) + ")";
        out += "\n";
    }
    if (!report.areas.empty()) {
        out += "area series:\n";
        for (const auto& area : report.areas)
            out += "  S_" + std::to_string(area.index + 1) + ": sigma = " +
                   area.sigma_val.to_string() + ", s = " + area.initial_coeff.to_string() + "\n";
    }
    if (report.injectivity.pass) {
        out += "injectivity: pass\n";
        if (report.snake) out += "snake: " + report.snake->to_string() + "\n";
        if (report.theorem_b)
            out += std::string("discriminant tree isomorphism: ") +
                   (*report.theorem_b ? "true" : "false") + "\n";
    } else {
        const auto& w = *report.injectivity.witness;
        out += "injectivity: FAIL at vertex with E = " +
               report.real_tree.vertex(w.vertex).exponent.to_string() + " (edges " +
               std::to_string(w.entry_a + 1) + ".." + std::to_string(w.entry_b + 1) +
               " sum to zero)\n";
        for (const auto& ps : report.pair_signs) {
            out += "  F(xi_" + std::to_string(ps.j + 1) + ") - F(xi_" + std::to_string(ps.i + 1) +
                   "): ";
            out += ps.sign ? (*ps.sign > 0 ? "positive" : "negative") : "indeterminate";
            out += "\n";
        }
    }
    if (report.oracle) {
        out += "oracle snake: " + report.oracle->snake.to_string() + " at x0 = " +
               report.oracle->x0_used.to_string() + "\n";
        if (report.oracle_agrees)
            out += std::string("oracle agreement: ") + (*report.oracle_agrees ? "yes" : "NO") + "\n";
    }
    return out;
}

}  // namespace morsify
