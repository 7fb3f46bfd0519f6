#pragma once

// Rooted binary phylogenetic trees. The root is an auxiliary labelled vertex
// "rho" sitting at the top of a pendant edge, so the label set of a full tree
// is X plus rho. Restrictions may drop rho, in which case the root is an
// ordinary binary vertex (or a single leaf).

#include <map>
#include <string>
#include <vector>

namespace hyb {

inline constexpr const char* kRho = "rho";

class PhyloTree;

// Mutable node pool used while assembling a tree; freeze() validates the
// shape and produces the immutable PhyloTree.
struct TreeScaffold {
  struct Node {
    std::string label;  // empty for internal vertices
    std::vector<int> children;
  };
  std::vector<Node> nodes;

  int leaf(const std::string& label);
  int join(int left, int right);

  // adjoin_rho adds the pendant root edge above `top`.
  PhyloTree freeze(int top, bool adjoin_rho) const;
};

class PhyloTree {
 public:
  PhyloTree() = default;

  int root() const { return root_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int parent(int v) const { return verts_[v].parent; }
  const std::vector<int>& children(int v) const { return verts_[v].children; }
  bool is_leaf(int v) const { return verts_[v].children.empty(); }
  bool is_labelled(int v) const { return !verts_[v].label.empty(); }
  const std::string& label(int v) const { return verts_[v].label; }

  int vertex_of(const std::string& label) const;  // -1 when absent
  bool has_taxon(const std::string& label) const { return vertex_of(label) >= 0; }
  std::vector<std::string> taxa() const;  // sorted, includes rho when present
  int leaf_count() const { return static_cast<int>(by_label_.size()); }
  int depth(int v) const;

  // Strict ancestry: true iff u != v and u lies on the root path of v.
  bool is_ancestor(int u, int v) const;
  int lca(int u, int v) const;
  int lca_of(const std::vector<std::string>& labels) const;

  // Vertices of the minimal subtree connecting `labels`.
  std::vector<int> spanned_vertices(const std::vector<std::string>& labels) const;
  // Root of that minimal subtree within this tree (for ancestry queries).
  int restriction_root(const std::vector<std::string>& labels) const;

  // Restriction: minimal connecting subtree with non-root degree-2 vertices
  // suppressed. surviving_of_new, when given, maps new vertex ids back to
  // vertex ids of this tree.
  PhyloTree restrict(const std::vector<std::string>& labels,
                     std::vector<int>* orig_of_new = nullptr) const;
  PhyloTree delete_taxa(const std::vector<std::string>& labels) const;
  PhyloTree relabel(const std::map<std::string, std::string>& renames) const;

  // Iso-invariant serialization; children ordered by the lexicographically
  // smallest leaf label of their subtree. Includes rho.
  const std::string& canonical_form() const { return canon_; }
  static bool isomorphic(const PhyloTree& a, const PhyloTree& b) {
    return a.canon_ == b.canon_;
  }

  // Subtree ordering key: smallest leaf label below v.
  const std::string& min_leaf(int v) const { return min_leaf_[v]; }

 private:
  friend struct TreeScaffold;
  struct Vertex {
    int parent = -1;
    std::vector<int> children;
    std::string label;
  };
  std::vector<Vertex> verts_;
  int root_ = -1;
  std::map<std::string, int> by_label_;
  std::vector<std::string> min_leaf_;
  std::string canon_;

  void finish();  // index labels, validate, precompute canonical data
};

}  // namespace hyb
