#pragma once

// Structural queries shared by the reduction machinery: common pendant
// subtrees and common chains of a tree pair. A chain (a_1,...,a_n) is a leaf
// tuple whose leaves and parents induce a caterpillar; the bottom pair may
// share a parent, every other consecutive pair climbs one rung.

#include <string>
#include <vector>

#include "hyb/phylo_tree.hpp"

namespace hyb {

struct Chain {
  std::vector<std::string> leaves;  // bottom to top
  bool bottom_is_cherry = false;    // bottom pair shares a parent in both trees
};

// Chain predicate for a single tree, in the given order.
bool is_chain(const PhyloTree& t, const std::vector<std::string>& tuple);

// A tuple is a common chain when it is a chain of both trees in the same
// order; a shared-parent bottom pair is unordered, so both orders are tried.
bool is_common_chain(const PhyloTree& t1, const PhyloTree& t2,
                     const std::vector<std::string>& tuple);

// Maximal label sets (size >= 2) that are pendant in both trees with
// isomorphic subtrees; pairwise disjoint, each sorted, deterministic order.
std::vector<std::vector<std::string>> common_pendant_subtrees(const PhyloTree& t1,
                                                              const PhyloTree& t2);

// All maximal common chains, pairwise leaf-disjoint, extracted greedily from
// the bottom of each caterpillar in lexicographic leaf order.
std::vector<Chain> common_chains(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace hyb
