#include "morsify/dot.hpp"

namespace morsify {

namespace {

std::string exponent_label(const Valuation& e) {
    if (e.is_infinite()) return "x^inf";
    const Rational& r = e.finite();
    if (r.is_integer()) return "x^" + r.to_string();
    return "x^{" + r.to_string() + "}";
}

}  // namespace

std::string emit_dot(const ContactTree& tree, const std::string& real_leaf_prefix) {
    std::string out = "digraph contact_tree {\n";
    out += "  node [shape=plaintext];\n";
    for (int v = 0; v < tree.vertex_count(); ++v) {
        const auto& vx = tree.vertex(v);
        std::string label;
        if (v == tree.root())
            label = "O";
        else if (vx.leaf_index >= 0 && !vx.complex_leaf)
            label = real_leaf_prefix + "_" + std::to_string(vx.leaf_index + 1);
        else if (vx.complex_leaf) {
            label = "eta_" + std::to_string(vx.leaf_index + 1);
            if (vx.multiplicity > 1) label += " [m=" + std::to_string(vx.multiplicity) + "]";
        } else
            label = exponent_label(vx.exponent);
        out += "  v" + std::to_string(v) + " [label=\"" + label + "\"";
        if (!vx.on_real_path) out += ", style=dotted";
        out += "];\n";
    }
    for (int v = 0; v < tree.vertex_count(); ++v)
        for (int c : tree.vertex(v).children) {
            out += "  v" + std::to_string(v) + " -> v" + std::to_string(c);
            if (!tree.vertex(c).on_real_path) out += " [style=dotted]";
            out += ";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace morsify
