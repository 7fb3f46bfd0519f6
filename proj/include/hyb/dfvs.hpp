#pragma once

// Directed feedback vertex set: validity check, exact branch-and-bound
// solver, greedy heuristic, and the weighted-to-unit-weight blow-up with its
// contraction back.

#include <vector>

#include "hyb/digraph.hpp"

namespace hyb {

bool is_fvs(const WeightedDigraph& g, const std::vector<int>& vs);
long long fvs_weight(const WeightedDigraph& g, const std::vector<int>& vs);

// Minimum-weight FVS. Branch and bound on shortest cycles with a
// disjoint-cycle lower bound; deterministic (branching follows vertex
// order, incumbents replaced only on strict improvement).
std::vector<int> exact_dfvs(const WeightedDigraph& g, int max_vertices = 25);

// Valid FVS with no optimality promise: repeatedly remove, from a shortest
// cycle, the vertex minimizing weight / (in-degree * out-degree) within its
// strongly connected component, then drop redundant picks.
std::vector<int> greedy_dfvs(const WeightedDigraph& g);

// Each vertex v becomes w(v) unit-weight copies; each edge becomes the
// complete bipartite set between copy groups.
struct ExpandedDigraph {
  WeightedDigraph graph;
  std::vector<int> source_of;  // copy vertex -> original vertex
};
ExpandedDigraph expand_weighted(const WeightedDigraph& g);

// v joins the contracted set iff every copy of v is in the expanded FVS;
// the result is an FVS of g with weight at most |fvs_of_expanded|.
std::vector<int> contract_fvs(const WeightedDigraph& g, const ExpandedDigraph& ex,
                              const std::vector<int>& fvs_of_expanded);

}  // namespace hyb
