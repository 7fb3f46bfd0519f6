#pragma once

// Forward reduction: auxiliary weighted DFVS instance built from the chain
// forest, the FVS <-> splitting translations, and the end-to-end
// approximation pipeline.

#include <set>
#include <string>
#include <vector>

#include "hyb/agreement_forest.hpp"
#include "hyb/digraph.hpp"
#include "hyb/network.hpp"
#include "hyb/tree_reduction.hpp"

namespace hyb {

// Two vertices per chain element: v weighted by the chain length n, and a
// barred partner of weight 1 joined to v by a 2-cycle. Non-chain taxa get no
// vertex. Every FVS must hit each 2-cycle, so each chain contributes either
// its vertex (atomize) or the barred partner (survive).
struct AuxiliaryGraph {
  WeightedDigraph graph;
  std::vector<int> chain_vertex;   // chain index -> graph vertex
  std::vector<int> barred_vertex;  // chain index -> graph vertex
  int s = 0;                       // non-chain element count

  int chain_of_vertex(int v) const;  // -1 for barred vertices
  bool is_barred(int v) const;
};

AuxiliaryGraph build_auxiliary_graph(const ChainForest& bt, const PhyloTree& t1,
                                     const PhyloTree& t2);

// Drop every barred vertex whose partner is also selected; never increases
// the weight and preserves FVS validity.
std::vector<int> normalize_fvs(const AuxiliaryGraph& aux, const std::vector<int>& fvs);

// Normalizes the FVS first (drop a barred vertex when its partner is also
// selected), then atomizes exactly the chains whose non-barred vertex is
// selected. Result has size (normalized weight) + s.
AgreementForest fvs_to_splitting(const AuxiliaryGraph& aux, const ChainForest& bt,
                                 const std::vector<int>& fvs);

// Select v for atomized chains and the barred partner for surviving ones.
std::vector<int> splitting_to_fvs(const AuxiliaryGraph& aux,
                                  const std::set<int>& atomized);

enum class DfvsSolver { kExact, kGreedy };

struct ApproxResult {
  int hybridization_number = 0;  // |F| - 1 of the returned forest
  AgreementForest forest;        // acyclic agreement forest on the input taxa
  HybridNetwork network;         // displays both inputs
  long long fvs_weight = 0;      // k, after normalization
  int non_chain_elements = 0;    // s
  int chain_forest_size = 0;     // |B_T|
  int reduced_taxa = 0;          // |X'|
  std::string solver;
  double wall_ms = 0;
};

// Pipeline: subtree reduction, chain reduction, chain forest, auxiliary
// graph, DFVS, splitting, subtree re-expansion, network construction. With
// the exact solver the result r satisfies h <= r < 6h whenever h >= 1.
ApproxResult approximate_hybridization(const PhyloTree& t1, const PhyloTree& t2,
                                       DfvsSolver solver,
                                       int exact_cap = 25);

}  // namespace hyb
