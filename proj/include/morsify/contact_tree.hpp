#pragma once

#include <map>
#include <span>
#include <vector>

#include "morsify/root_system.hpp"

namespace morsify {

// Rooted tree encoding the valuations of pairwise differences of a finite
// set of Newton-Puiseux polynomials. The root O has exponent 0 and a
// single child; vertices carry the exponent function E, strictly
// increasing towards the leaves, which sit at E = infinity. Children are
// stored in planar order: subtrees containing real leaves first, ordered
// by the real total order of their leaves, then complex-only subtrees in
// input order. Immutable after construction.
class ContactTree {
public:
    struct Vertex {
        Valuation exponent = Valuation(0);
        int parent = -1;
        int depth = 0;
        std::vector<int> children;  // planar order
        int leaf_index = -1;        // input label; -1 for non-leaves
        bool complex_leaf = false;
        int multiplicity = 1;
        bool on_real_path = false;  // lies on [O, xi] for some real leaf
        int real_lo = -1;           // planar-rank interval of real leaves below,
        int real_hi = -1;           //   [-1, -1] when there are none
    };

    int root() const { return 0; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }

    int n_real_leaves() const { return static_cast<int>(real_leaf_vertex_.size()); }
    int n_complex_leaves() const { return static_cast<int>(complex_leaf_vertex_.size()); }
    int real_leaf_vertex(int input_index) const { return real_leaf_vertex_[input_index]; }
    int complex_leaf_vertex(int k) const { return complex_leaf_vertex_[k]; }

    // Real-leaf input labels in planar traversal order.
    const std::vector<int>& planar_leaf_order() const { return planar_leaf_order_; }
    // Input label of the real leaf at a planar rank, and back.
    int leaf_at_rank(int rank) const { return planar_leaf_order_[rank]; }
    int rank_of_leaf(int input_index) const { return leaf_rank_[input_index]; }

    bool is_ancestor_or_equal(int p, int q) const;
    // Greatest lower bound in the tree partial order.
    int wedge(int p, int q) const;

    // Vertices of the real subtree seen as a tree of its own: the root,
    // the real leaves, and every vertex with at least two child subtrees
    // containing real leaves.
    bool is_real_vertex(int v) const;
    // Internal vertices of the real subtree, in preorder.
    std::vector<int> real_internal_vertices() const;

    struct EdgeGroup {
        int child;    // head of the outgoing edge (a child in this tree)
        int leaf_lo;  // planar-rank interval of the real leaves it carries
        int leaf_hi;
    };
    // Outgoing edges of the real subtree at a vertex, in planar order.
    std::vector<EdgeGroup> real_edge_groups(int v) const;

    // A copy of this tree with children permuted at the given vertices and
    // every vertex exponent replaced; the planar bookkeeping is rebuilt.
    // Exponents must still increase strictly towards the leaves.
    ContactTree reordered(const std::map<int, std::vector<int>>& new_children,
                          const std::vector<Valuation>& new_exponents) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<int> real_leaf_vertex_;
    std::vector<int> complex_leaf_vertex_;
    std::vector<int> planar_leaf_order_;
    std::vector<int> leaf_rank_;

    friend class TreeBuilder;
};

// Contact tree of pairwise distinct real-coefficient roots (val > 0).
// Leaves are labelled by input position; the planar structure is the real
// total order. Throws duplicate_root_error.
ContactTree build_contact_tree(const std::vector<PuiseuxPoly>& roots);

// Contact tree of all roots of a validated RootSystem: the complex tree
// with the real subtree marked. Complex leaves carry their multiplicity.
ContactTree build_embedded_trees(const RootSystem& rs);

// The integrated exponent at a non-leaf vertex of the real subtree:
// E(P) plus the multiplicity-weighted sum of E(P /\ leaf) over all leaves.
Rational sigma(const ContactTree& tree, int vertex);

// Whether a total order on the real leaves (given as input labels listed
// in ascending candidate order) comes from a planar structure.
bool is_planar_order(const ContactTree& tree, std::span<const int> order);

// The bijection between basic intervals of consecutive real leaves and
// basic intervals of outgoing edges at their wedge.
struct WedgeMap {
    struct Image {
        int vertex;
        int edge_pos;  // edges (edge_pos, edge_pos + 1) at vertex, 0-based
    };
    // forward[r]: image of the leaf interval {rank r, rank r+1}
    std::vector<Image> forward;
    // iota[vertex][k]: leaf rank r with forward[r] == {vertex, k}
    std::map<int, std::vector<int>> iota;
};
WedgeMap wedge_map(const ContactTree& tree);

}  // namespace morsify
