#pragma once

#include <string>

#include "morsify/contact_tree.hpp"

namespace morsify {

// DOT rendering of a contact tree: children in planar order, internal
// vertices labelled by their monomial x^E, leaves by their root name,
// complex-only subtrees dotted. Node ids follow vertex numbering, so the
// output is deterministic.
std::string emit_dot(const ContactTree& tree, const std::string& real_leaf_prefix = "xi");

}  // namespace morsify
