#include "hyb/phylo_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hyb/errors.hpp"

namespace hyb {

int TreeScaffold::leaf(const std::string& label) {
  nodes.push_back(Node{label, {}});
  return static_cast<int>(nodes.size()) - 1;
}

int TreeScaffold::join(int left, int right) {
  nodes.push_back(Node{"", {left, right}});
  return static_cast<int>(nodes.size()) - 1;
}

PhyloTree TreeScaffold::freeze(int top, bool adjoin_rho) const {
  PhyloTree t;
  // Copy reachable nodes depth-first so vertex ids are contiguous.
  std::function<int(int)> copy = [&](int s) {
    int id = static_cast<int>(t.verts_.size());
    t.verts_.push_back({});
    t.verts_[id].label = nodes[s].label;
    for (int c : nodes[s].children) {
      int cid = copy(c);
      t.verts_[id].children.push_back(cid);
      t.verts_[cid].parent = id;
    }
    return id;
  };
  if (adjoin_rho) {
    int r = static_cast<int>(t.verts_.size());
    t.verts_.push_back({});
    t.verts_[r].label = kRho;
    int c = copy(top);
    t.verts_[r].children.push_back(c);
    t.verts_[c].parent = r;
    t.root_ = r;
  } else {
    t.root_ = copy(top);
  }
  t.finish();
  return t;
}

void PhyloTree::finish() {
  by_label_.clear();
  for (int v = 0; v < vertex_count(); ++v) {
    const Vertex& vx = verts_[v];
    if (!vx.label.empty()) {
      if (!by_label_.emplace(vx.label, v).second)
        throw InvalidInput("duplicate leaf label '" + vx.label + "'");
    }
    size_t deg = vx.children.size();
    bool ok = (deg == 0 && !vx.label.empty()) || (deg == 2 && vx.label.empty()) ||
              (deg == 1 && v == root_ && vx.label == kRho);
    if (!ok) throw InvalidInput("vertex violates binary tree shape");
  }
  // Canonical data bottom-up.
  min_leaf_.assign(vertex_count(), "");
  std::vector<std::string> canon(vertex_count());
  std::function<void(int)> walk = [&](int v) {
    if (is_leaf(v)) {
      min_leaf_[v] = verts_[v].label;
      canon[v] = verts_[v].label;
      return;
    }
    for (int c : verts_[v].children) walk(c);
    if (verts_[v].children.size() == 1) {
      int c = verts_[v].children[0];
      min_leaf_[v] = std::min(std::string(kRho), min_leaf_[c]);
      canon[v] = "(" + canon[c] + ")" + kRho;
      return;
    }
    int a = verts_[v].children[0], b = verts_[v].children[1];
    if (min_leaf_[b] < min_leaf_[a]) std::swap(a, b);
    min_leaf_[v] = min_leaf_[a];
    canon[v] = "(" + canon[a] + "," + canon[b] + ")";
  };
  walk(root_);
  canon_ = canon[root_];
}

int PhyloTree::vertex_of(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? -1 : it->second;
}

std::vector<std::string> PhyloTree::taxa() const {
  std::vector<std::string> out;
  out.reserve(by_label_.size());
  for (const auto& [lbl, v] : by_label_) out.push_back(lbl);
  return out;
}

int PhyloTree::depth(int v) const {
  int d = 0;
  while (verts_[v].parent >= 0) {
    v = verts_[v].parent;
    ++d;
  }
  return d;
}

bool PhyloTree::is_ancestor(int u, int v) const {
  if (u == v) return false;
  while (verts_[v].parent >= 0) {
    v = verts_[v].parent;
    if (v == u) return true;
  }
  return false;
}

int PhyloTree::lca(int u, int v) const {
  int du = depth(u), dv = depth(v);
  while (du > dv) u = verts_[u].parent, --du;
  while (dv > du) v = verts_[v].parent, --dv;
  while (u != v) u = verts_[u].parent, v = verts_[v].parent;
  return u;
}

int PhyloTree::lca_of(const std::vector<std::string>& labels) const {
  if (labels.empty()) throw InvalidInput("empty label set");
  int acc = -1;
  for (const std::string& l : labels) {
    int v = vertex_of(l);
    if (v < 0) throw InvalidInput("unknown label '" + l + "'");
    acc = acc < 0 ? v : lca(acc, v);
  }
  return acc;
}

std::vector<int> PhyloTree::spanned_vertices(const std::vector<std::string>& labels) const {
  int top = lca_of(labels);
  std::vector<char> mark(vertex_count(), 0);
  for (const std::string& l : labels) {
    int v = vertex_of(l);
    while (v != top && !mark[v]) {
      mark[v] = 1;
      v = verts_[v].parent;
    }
  }
  mark[top] = 1;
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

int PhyloTree::restriction_root(const std::vector<std::string>& labels) const {
  return lca_of(labels);
}

PhyloTree PhyloTree::restrict(const std::vector<std::string>& labels,
                              std::vector<int>* orig_of_new) const {
  std::vector<int> span = spanned_vertices(labels);
  std::vector<char> in_span(vertex_count(), 0);
  for (int v : span) in_span[v] = 1;
  int top = lca_of(labels);

  TreeScaffold sc;
  std::vector<int> orig;  // scaffold id -> vertex of this tree
  // Copy from the restriction root, suppressing spanned vertices that keep
  // only a single spanned child; the top keeps its pendant edge (rho case).
  std::function<int(int)> build = [&](int v) -> int {
    std::vector<int> kids;
    for (int c : verts_[v].children)
      if (in_span[c]) kids.push_back(c);
    if (kids.size() == 1 && v != top) return build(kids[0]);
    int id;
    if (kids.empty()) {
      id = sc.leaf(verts_[v].label);
    } else if (kids.size() == 1) {
      int c = build(kids[0]);
      id = static_cast<int>(sc.nodes.size());
      sc.nodes.push_back(TreeScaffold::Node{verts_[v].label, {c}});
    } else {
      int a = build(kids[0]);
      int b = build(kids[1]);
      id = sc.join(a, b);
    }
    if (static_cast<int>(orig.size()) <= id) orig.resize(id + 1, -1);
    orig[id] = v;
    return id;
  };
  int top_id = build(top);
  PhyloTree out = sc.freeze(top_id, false);
  if (orig_of_new) {
    // freeze() copies depth-first from top_id; replay the same order.
    orig_of_new->assign(out.vertex_count(), -1);
    int next = 0;
    std::function<void(int)> replay = [&](int s) {
      (*orig_of_new)[next++] = orig[s];
      for (int c : sc.nodes[s].children) replay(c);
    };
    replay(top_id);
  }
  return out;
}

PhyloTree PhyloTree::delete_taxa(const std::vector<std::string>& labels) const {
  std::set<std::string> drop(labels.begin(), labels.end());
  std::vector<std::string> keep;
  for (const std::string& t : taxa())
    if (!drop.count(t)) keep.push_back(t);
  if (keep.empty()) throw InvalidInput("cannot delete every taxon");
  return restrict(keep);
}

PhyloTree PhyloTree::relabel(const std::map<std::string, std::string>& renames) const {
  PhyloTree out = *this;
  for (auto& vx : out.verts_) {
    auto it = renames.find(vx.label);
    if (it != renames.end()) vx.label = it->second;
  }
  out.finish();
  return out;
}

}  // namespace hyb
