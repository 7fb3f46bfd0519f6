#pragma once

// Kernelization of a tree pair: exhaustive subtree reduction, then
// exhaustive chain reduction, producing the reduced pair (S, S') together
// with the weighted 2-chain set P and the maps needed to expand legitimate
// forests back to the original taxa.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyb/agreement_forest.hpp"
#include "hyb/phylo_tree.hpp"

namespace hyb {

struct ReducedChain {
  std::string a, b;                   // fresh bottom/top labels of the 2-chain
  std::vector<std::string> original;  // replaced tuple, bottom to top
  int weight() const { return static_cast<int>(original.size()) - 2; }
};

struct ReducedInstance {
  PhyloTree s, s_prime;
  std::vector<ReducedChain> p;
  // Fresh subtree label -> original pendant taxon set, in replacement order.
  std::vector<std::pair<std::string, std::vector<std::string>>> subtree_map;

  int reduced_taxa() const;  // |X'|: leaves of s minus rho
  const ReducedChain* chain_by_labels(const std::string& a, const std::string& b) const;
};

ReducedInstance reduce_pair(const PhyloTree& t1, const PhyloTree& t2);

// Weight of an agreement forest for the reduced pair:
// |F| - 1 + sum of w(a,b) over atomized chains of P.
int forest_weight(const AgreementForest& f, const ReducedInstance& inst);

// Legitimate: acyclic and every chain of P either survives (some component
// contains both labels) or is atomized (both labels are singletons).
bool is_legitimate(const AgreementForest& f, const ReducedInstance& inst);

// Expand a legitimate forest to an acyclic agreement forest of the original
// pair with |F| - 1 equal to the reduced forest's weight.
AgreementForest expand_forest(const AgreementForest& f, const ReducedInstance& inst);

// Kernel bound |X'| < 9h, used as a tested invariant; requires h >= 1.
bool check_kernel_bound(const ReducedInstance& inst, int h);

// Chain forests of a pair with no common pendant subtrees on >= 2 leaves
// (checked): B_S over (S, S') and B_T over (t1, t2).
std::pair<ChainForest, ChainForest> chain_forest(const PhyloTree& t1,
                                                 const PhyloTree& t2,
                                                 const ReducedInstance& inst);

// Replace each maximal common pendant subtree by a fresh leaf; the second
// element maps fresh labels to the replaced taxon sets.
struct SubtreeReduction {
  PhyloTree t1, t2;
  std::vector<std::pair<std::string, std::vector<std::string>>> map;
};
SubtreeReduction reduce_subtrees(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace hyb
