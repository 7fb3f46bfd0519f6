#pragma once

// Hybridization networks: rooted binary acyclic digraphs whose indegree-2
// vertices are the reticulations. Networks carry the same augmented root as
// trees: a vertex labelled rho above the original root. h(H) counts
// reticulations as the sum of (indegree - 1) over non-root vertices.

#include <string>
#include <vector>

#include "hyb/agreement_forest.hpp"
#include "hyb/phylo_tree.hpp"

namespace hyb {

class HybridNetwork {
 public:
  struct Vertex {
    std::string label;  // empty for internal vertices
    std::vector<int> parents, children;
  };

  static HybridNetwork from_tree(const PhyloTree& t);

  int root() const { return root_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int v) const { return verts_[v]; }
  int indegree(int v) const { return static_cast<int>(verts_[v].parents.size()); }
  int outdegree(int v) const { return static_cast<int>(verts_[v].children.size()); }
  bool is_reticulation(int v) const { return indegree(v) >= 2; }
  std::vector<int> reticulations() const;
  std::vector<std::string> taxa() const;  // sorted, includes rho

  int hybridization_count() const;

 private:
  friend class NetworkBuilder;
  std::vector<Vertex> verts_;
  int root_ = -1;

  void validate() const;
};

// Mutable assembly helper; freeze() validates shape and degree constraints.
class NetworkBuilder {
 public:
  int add(const std::string& label = "");
  void link(int parent, int child);
  void unlink(int parent, int child);
  int node_count() const { return static_cast<int>(net_.verts_.size()); }
  HybridNetwork::Vertex& at(int v) { return net_.verts_[v]; }
  // Removes duplicate parallel in-edges of reticulations by suppressing the
  // reticulation, then drops degree-1-1 vertices.
  void simplify();
  HybridNetwork freeze(int root);

 private:
  HybridNetwork net_;
};

// True iff some choice of one in-edge per reticulation yields, after
// deleting leaves outside L(t) and cleaning up, a tree isomorphic to t.
// Exhaustive over the 2^h switchings.
bool displays(const HybridNetwork& h, const PhyloTree& t);

// Build a network displaying both trees from an acyclic agreement forest,
// with hybridization number at most |F| - 1.
HybridNetwork network_from_forest(const AgreementForest& f, const PhyloTree& t1,
                                  const PhyloTree& t2);

// Leaf-stripped skeleton of a network: a directed acyclic multigraph with a
// single indegree-0 outdegree-1 root, reticulations of indegree 2 and
// outdegree <= 1, and indegree-1 outdegree-2 vertices otherwise. Sides are
// its edges plus its indegree-2 outdegree-0 vertices.
struct Generator {
  int r0 = 0;  // indegree 2, outdegree 0
  int r1 = 0;  // indegree 2, outdegree 1
  int s = 0;   // indegree 1, outdegree 2
  int edge_count = 0;
  std::vector<int> edge_side_leaves;  // leaves absorbed per edge side
  std::vector<int> node_side_leaves;  // leaves below each node side
  int reticulation_count() const { return r0 + r1; }
};

// Requires the displayed pair to have no common pendant subtree on >= 2
// leaves; a surviving indegree-1 outdegree-0 vertex signals the violation.
Generator extract_generator(const HybridNetwork& h);

// Extended Newick. Reticulations appear twice under a shared #Hk tag; the
// rho root is suppressed on output and re-adjoined on input. Deterministic:
// re-serialization is byte-stable.
std::string write_network(const HybridNetwork& h);
HybridNetwork parse_network(const std::string& text);

// Exhaustive isomorphism check (leaf labels preserved); intended for test
// corpora where the reticulation count is small.
bool network_isomorphic(const HybridNetwork& a, const HybridNetwork& b);

}  // namespace hyb
