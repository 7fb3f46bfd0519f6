#pragma once

// Agreement forests of a tree pair, their inheritance graphs, and chain
// forests. An agreement forest is a partition of the taxa (rho included)
// whose parts induce isomorphic, vertex-disjoint subtrees in both trees; it
// is acyclic when the inheritance graph has no directed cycle.

#include <set>
#include <string>
#include <vector>

#include "hyb/digraph.hpp"
#include "hyb/phylo_tree.hpp"

namespace hyb {

struct AgreementForest {
  // Each component sorted; components ordered with the rho component first,
  // then by smallest label.
  std::vector<std::vector<std::string>> components;

  int size() const { return static_cast<int>(components.size()); }
  void normalize();
  int component_of(const std::string& label) const;  // -1 when absent
};

AgreementForest forest_of_components(std::vector<std::vector<std::string>> comps);

// Exact check of both defining conditions; when `why` is given it receives a
// short reason for a failure.
bool is_agreement_forest(const AgreementForest& f, const PhyloTree& t1,
                         const PhyloTree& t2, std::string* why = nullptr);

struct InheritanceGraph {
  std::vector<std::vector<std::string>> components;  // forest order
  // One vertex per component, named by its smallest label; edge (i,j) when
  // the embedded root of i is a strict ancestor of the embedded root of j in
  // either tree.
  WeightedDigraph graph;
};

InheritanceGraph inheritance_graph(const AgreementForest& f, const PhyloTree& t1,
                                   const PhyloTree& t2);
bool is_acyclic(const InheritanceGraph& g);

// Chain forest: one element per common chain, one singleton per non-chain
// taxon. The over-S flavour carries 2-chain elements of the reduced pair;
// the over-T flavour expands reduced chains to their original tuples.
struct ChainForest {
  bool over_original = false;                         // B_T when true
  std::vector<std::vector<std::string>> chains;       // tuples, bottom to top
  std::vector<int> reduced_index;                     // index into P, or -1 if unreduced
  std::vector<std::string> singletons;                // non-chain taxa incl rho

  int chain_count() const { return static_cast<int>(chains.size()); }
  int non_chain_count() const { return static_cast<int>(singletons.size()); }
  int size() const { return chain_count() + non_chain_count(); }
  AgreementForest forest() const;
};

// Atomize the selected chain elements; the caller certifies a splitting by
// checking acyclicity of the result.
AgreementForest splitting(const ChainForest& bt, const std::set<int>& atomize);

}  // namespace hyb
