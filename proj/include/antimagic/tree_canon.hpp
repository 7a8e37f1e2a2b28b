// antimagic/tree_canon.hpp - canonical codes and enumeration of unlabeled trees

#pragma once

#include <string>
#include <vector>

#include "antimagic/forest.hpp"

namespace antimagic {

// Parenthesis code of the component rooted at its center; for two centers the
// smaller of the two rooted codes. Equal codes <=> isomorphic trees.
std::string tree_canonical_form(const Forest& g, const Component& comp);

// Component codes sorted and joined with '+'. Equal <=> isomorphic forests.
std::string forest_canonical_form(const Forest& g);

// All trees on the given number of vertices up to isomorphism, ordered by
// canonical code. Each is returned as a one-component forest.
std::vector<Forest> unlabeled_trees(int vertices);

// "P5", "S4", "S(1,2)", or "T<n>:<code>" for other shapes.
std::string describe_tree(const Forest& g, const Component& comp);

// Components named as above, largest first, repeats folded as "<k>*<name>".
std::string describe_forest(const Forest& g);

}  // namespace antimagic
