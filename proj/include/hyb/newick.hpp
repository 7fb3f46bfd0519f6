#pragma once

// Newick reading and writing for rooted binary trees. Branch lengths and
// internal labels are accepted on input and discarded; the label "rho" is
// reserved for the internal root vertex and rejected on input. Output is
// canonical: rho suppressed, children ordered by the lexicographically
// smallest leaf label of their subtree.

#include <string>

#include "hyb/phylo_tree.hpp"

namespace hyb {

PhyloTree parse_tree(const std::string& newick);
std::string write_tree(const PhyloTree& t);

}  // namespace hyb
