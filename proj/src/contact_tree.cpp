#include "morsify/contact_tree.hpp"

#include <algorithm>

namespace morsify {

namespace {

struct Item {
    const PuiseuxPoly* series;
    int label;
    bool complex_leaf;
    int multiplicity;
};

}  // namespace

class TreeBuilder {
public:
    ContactTree build(std::vector<Item> items) {
        for (size_t i = 0; i < items.size(); ++i)
            for (size_t j = i + 1; j < items.size(); ++j)
                if (*items[i].series == *items[j].series)
                    throw duplicate_root_error("duplicate root " + items[i].series->to_string());

        int n_real = 0, n_complex = 0;
        for (const auto& it : items) (it.complex_leaf ? n_complex : n_real)++;
        tree_.real_leaf_vertex_.assign(n_real, -1);
        tree_.complex_leaf_vertex_.assign(n_complex, -1);

        new_vertex(Valuation(0), -1);  // the root O
        build_subtree(0, items);
        finalize();
        return std::move(tree_);
    }

private:
    int new_vertex(Valuation exponent, int parent) {
        ContactTree::Vertex v;
        v.exponent = std::move(exponent);
        v.parent = parent;
        v.depth = parent < 0 ? 0 : tree_.vertices_[parent].depth + 1;
        tree_.vertices_.push_back(std::move(v));
        int id = static_cast<int>(tree_.vertices_.size()) - 1;
        if (parent >= 0) tree_.vertices_[parent].children.push_back(id);
        return id;
    }

    void build_subtree(int parent, const std::vector<Item>& items) {
        if (items.size() == 1) {
            const Item& it = items[0];
            int id = new_vertex(Valuation::infinity(), parent);
            auto& v = tree_.vertices_[id];
            v.leaf_index = it.label;
            v.complex_leaf = it.complex_leaf;
            v.multiplicity = it.multiplicity;
            if (it.complex_leaf)
                tree_.complex_leaf_vertex_[it.label] = id;
            else
                tree_.real_leaf_vertex_[it.label] = id;
            return;
        }

        // Smallest pairwise valuation of differences: the branching exponent.
        Valuation k = Valuation::infinity();
        for (size_t i = 0; i < items.size(); ++i)
            for (size_t j = i + 1; j < items.size(); ++j) {
                Valuation v = (*items[j].series - *items[i].series).val();
                if (v < k) k = v;
            }

        // Group the series agreeing beyond x^k; an equivalence relation by
        // the ultrametric inequality.
        std::vector<std::vector<Item>> classes;
        std::vector<bool> assigned(items.size(), false);
        for (size_t i = 0; i < items.size(); ++i) {
            if (assigned[i]) continue;
            std::vector<Item> cls{items[i]};
            assigned[i] = true;
            for (size_t j = i + 1; j < items.size(); ++j) {
                if (assigned[j]) continue;
                if (k < (*items[j].series - *items[i].series).val()) {
                    cls.push_back(items[j]);
                    assigned[j] = true;
                }
            }
            classes.push_back(std::move(cls));
        }

        // Real-bearing classes first, by the real order of their smallest
        // real member; complex-only classes afterwards, by smallest label.
        auto real_min = [](const std::vector<Item>& cls) -> const PuiseuxPoly* {
            const PuiseuxPoly* best = nullptr;
            for (const auto& it : cls)
                if (!it.complex_leaf && (best == nullptr || real_less(*it.series, *best)))
                    best = it.series;
            return best;
        };
        auto label_min = [](const std::vector<Item>& cls) {
            int best = cls[0].label;
            for (const auto& it : cls) best = std::min(best, it.label);
            return best;
        };
        std::stable_sort(classes.begin(), classes.end(),
                         [&](const std::vector<Item>& a, const std::vector<Item>& b) {
                             const PuiseuxPoly* ra = real_min(a);
                             const PuiseuxPoly* rb = real_min(b);
                             if (ra && rb) return real_less(*ra, *rb);
                             if (ra != rb) return ra != nullptr;  // real classes first
                             return label_min(a) < label_min(b);
                         });

        int id = new_vertex(k, parent);
        for (const auto& cls : classes) build_subtree(id, cls);
    }

    void finalize() {
        auto& vs = tree_.vertices_;
        // E strictly increases from parent to child.
        for (size_t v = 1; v < vs.size(); ++v)
            if (!(vs[vs[v].parent].exponent < vs[v].exponent))
                throw internal_check_error("exponent not increasing along tree edge");

        // Planar ranks of the real leaves, by traversal order, and the
        // covered intervals, bottom-up (children precede parents in
        // reverse preorder).
        tree_.leaf_rank_.assign(tree_.real_leaf_vertex_.size(), -1);
        for (size_t v = 0; v < vs.size(); ++v) {
            if (vs[v].leaf_index >= 0 && !vs[v].complex_leaf) {
                int rank = static_cast<int>(tree_.planar_leaf_order_.size());
                tree_.planar_leaf_order_.push_back(vs[v].leaf_index);
                tree_.leaf_rank_[vs[v].leaf_index] = rank;
                vs[v].real_lo = vs[v].real_hi = rank;
                vs[v].on_real_path = true;
            }
        }
        for (int v = static_cast<int>(vs.size()) - 1; v >= 0; --v) {
            for (int c : vs[v].children) {
                if (vs[c].real_lo < 0) continue;
                vs[v].on_real_path = true;
                if (vs[v].real_lo < 0) {
                    vs[v].real_lo = vs[c].real_lo;
                    vs[v].real_hi = vs[c].real_hi;
                } else {
                    vs[v].real_lo = std::min(vs[v].real_lo, vs[c].real_lo);
                    vs[v].real_hi = std::max(vs[v].real_hi, vs[c].real_hi);
                }
            }
        }
    }

    ContactTree tree_;
};

ContactTree build_contact_tree(const std::vector<PuiseuxPoly>& roots) {
    if (roots.empty()) throw error("contact tree of an empty root set");
    std::vector<Item> items;
    items.reserve(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
        if (!roots[i].has_rational_coeffs())
            throw not_rational_error("contact tree root " + roots[i].to_string() +
                                     " has non-rational coefficients");
        items.push_back({&roots[i], static_cast<int>(i), false, 1});
    }
    return TreeBuilder().build(std::move(items));
}

ContactTree build_embedded_trees(const RootSystem& rs) {
    std::vector<Item> items;
    items.reserve(rs.real_roots().size() + rs.complex_roots().size());
    for (size_t i = 0; i < rs.real_roots().size(); ++i)
        items.push_back({&rs.real_roots()[i], static_cast<int>(i), false, 1});
    for (size_t l = 0; l < rs.complex_roots().size(); ++l)
        items.push_back({&rs.complex_roots()[l].series, static_cast<int>(l), true,
                         rs.complex_roots()[l].multiplicity});
    return TreeBuilder().build(std::move(items));
}

bool ContactTree::is_ancestor_or_equal(int p, int q) const {
    while (vertices_[q].depth > vertices_[p].depth) q = vertices_[q].parent;
    return p == q;
}

int ContactTree::wedge(int p, int q) const {
    while (vertices_[p].depth > vertices_[q].depth) p = vertices_[p].parent;
    while (vertices_[q].depth > vertices_[p].depth) q = vertices_[q].parent;
    while (p != q) {
        p = vertices_[p].parent;
        q = vertices_[q].parent;
    }
    return p;
}

bool ContactTree::is_real_vertex(int v) const {
    const Vertex& vx = vertices_[v];
    if (!vx.on_real_path) return false;
    if (v == root() || vx.leaf_index >= 0) return true;
    int real_children = 0;
    for (int c : vx.children)
        if (vertices_[c].on_real_path) ++real_children;
    return real_children >= 2;
}

std::vector<int> ContactTree::real_internal_vertices() const {
    std::vector<int> out;
    for (int v = 1; v < vertex_count(); ++v)
        if (vertices_[v].leaf_index < 0 && is_real_vertex(v)) out.push_back(v);
    return out;
}

std::vector<ContactTree::EdgeGroup> ContactTree::real_edge_groups(int v) const {
    std::vector<EdgeGroup> out;
    for (int c : vertices_[v].children) {
        const Vertex& cv = vertices_[c];
        if (cv.real_lo < 0) continue;
        if (!out.empty() && out.back().leaf_hi + 1 != cv.real_lo)
            throw internal_check_error("real leaf intervals not contiguous");
        out.push_back({c, cv.real_lo, cv.real_hi});
    }
    return out;
}

ContactTree ContactTree::reordered(const std::map<int, std::vector<int>>& new_children,
                                   const std::vector<Valuation>& new_exponents) const {
    if (new_exponents.size() != vertices_.size())
        throw error("one exponent per vertex required");
    ContactTree out(*this);
    for (size_t v = 0; v < out.vertices_.size(); ++v)
        out.vertices_[v].exponent = new_exponents[v];
    for (const auto& [v, children] : new_children) {
        auto sorted_old = vertices_[v].children;
        auto sorted_new = children;
        std::sort(sorted_old.begin(), sorted_old.end());
        std::sort(sorted_new.begin(), sorted_new.end());
        if (sorted_old != sorted_new) throw error("reorder must permute the existing children");
        out.vertices_[v].children = children;
    }
    for (size_t v = 1; v < out.vertices_.size(); ++v)
        if (!(out.vertices_[out.vertices_[v].parent].exponent < out.vertices_[v].exponent))
            throw internal_check_error("exponent not increasing along tree edge");

    // Rebuild the planar leaf order and covered intervals by an explicit
    // traversal; vertex ids are no longer in preorder.
    out.planar_leaf_order_.clear();
    out.leaf_rank_.assign(real_leaf_vertex_.size(), -1);
    std::vector<int> stack{out.root()};
    std::vector<int> preorder;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        preorder.push_back(v);
        auto& vx = out.vertices_[v];
        vx.real_lo = vx.real_hi = -1;
        if (vx.leaf_index >= 0 && !vx.complex_leaf) {
            int rank = static_cast<int>(out.planar_leaf_order_.size());
            out.planar_leaf_order_.push_back(vx.leaf_index);
            out.leaf_rank_[vx.leaf_index] = rank;
            vx.real_lo = vx.real_hi = rank;
        }
        for (auto it = vx.children.rbegin(); it != vx.children.rend(); ++it) stack.push_back(*it);
    }
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
        auto& vx = out.vertices_[*it];
        for (int c : vx.children) {
            const auto& cv = out.vertices_[c];
            if (cv.real_lo < 0) continue;
            if (vx.real_lo < 0) {
                vx.real_lo = cv.real_lo;
                vx.real_hi = cv.real_hi;
            } else {
                vx.real_lo = std::min(vx.real_lo, cv.real_lo);
                vx.real_hi = std::max(vx.real_hi, cv.real_hi);
            }
        }
    }
    return out;
}

Rational sigma(const ContactTree& tree, int vertex) {
    const auto& vx = tree.vertex(vertex);
    if (vx.leaf_index >= 0) throw error("integrated exponent requested at a leaf");
    if (!vx.on_real_path) throw error("integrated exponent requested outside the real subtree");
    Rational acc = vx.exponent.finite();
    for (int i = 0; i < tree.n_real_leaves(); ++i)
        acc += tree.vertex(tree.wedge(vertex, tree.real_leaf_vertex(i))).exponent.finite();
    for (int l = 0; l < tree.n_complex_leaves(); ++l) {
        int w = tree.wedge(vertex, tree.complex_leaf_vertex(l));
        int mult = tree.vertex(tree.complex_leaf_vertex(l)).multiplicity;
        acc += tree.vertex(w).exponent.finite() * Rational(mult);
    }
    return acc;
}

bool is_planar_order(const ContactTree& tree, std::span<const int> order) {
    const int n = tree.n_real_leaves();
    if (static_cast<int>(order.size()) != n) throw error("order must list every real leaf");
    std::vector<int> rank(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        int label = order[pos];
        if (label < 0 || label >= n || rank[label] >= 0)
            throw error("order is not a permutation of the real leaves");
        rank[label] = pos;
    }

    // Candidate-rank range of the real leaves below every vertex.
    std::vector<int> lo(tree.vertex_count(), -1), hi(tree.vertex_count(), -1);
    for (int v = tree.vertex_count() - 1; v >= 0; --v) {
        const auto& vx = tree.vertex(v);
        if (vx.leaf_index >= 0 && !vx.complex_leaf) lo[v] = hi[v] = rank[vx.leaf_index];
        for (int c : vx.children) {
            if (lo[c] < 0) continue;
            lo[v] = lo[v] < 0 ? lo[c] : std::min(lo[v], lo[c]);
            hi[v] = hi[v] < 0 ? hi[c] : std::max(hi[v], hi[c]);
        }
    }

    // Any two incomparable vertices must have uniformly separated
    // descendant leaves; it suffices to compare sibling subtrees.
    for (int v = 0; v < tree.vertex_count(); ++v) {
        const auto& children = tree.vertex(v).children;
        for (size_t a = 0; a < children.size(); ++a) {
            if (lo[children[a]] < 0) continue;
            for (size_t b = a + 1; b < children.size(); ++b) {
                if (lo[children[b]] < 0) continue;
                bool separated = hi[children[a]] < lo[children[b]] ||
                                 hi[children[b]] < lo[children[a]];
                if (!separated) return false;
            }
        }
    }
    return true;
}

WedgeMap wedge_map(const ContactTree& tree) {
    WedgeMap map;
    const int n = tree.n_real_leaves();
    map.forward.assign(std::max(n - 1, 0), {-1, -1});
    for (int v : tree.real_internal_vertices()) {
        auto groups = tree.real_edge_groups(v);
        if (groups.size() < 2) continue;
        auto& iota = map.iota[v];
        for (size_t k = 0; k + 1 < groups.size(); ++k) {
            int r = groups[k].leaf_hi;
            if (map.forward[r].vertex >= 0)
                throw internal_check_error("wedge map image assigned twice");
            map.forward[r] = {v, static_cast<int>(k)};
            iota.push_back(r);
        }
    }
    for (const auto& img : map.forward)
        if (img.vertex < 0) throw internal_check_error("wedge map not total");
    return map;
}

}  // namespace morsify
