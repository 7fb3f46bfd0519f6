#include "hyb/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyb/errors.hpp"

namespace hyb {
namespace {

void require_same_taxa(const PhyloTree& t1, const PhyloTree& t2) {
  if (t1.taxa() != t2.taxa()) throw InvalidInput("label sets differ");
}

// The leaf sibling of leaf v, or -1.
int leaf_sibling(const PhyloTree& t, int v) {
  int p = t.parent(v);
  if (p < 0 || t.children(p).size() != 2) return -1;
  int s = t.children(p)[0] == v ? t.children(p)[1] : t.children(p)[0];
  return t.is_leaf(s) ? s : -1;
}

// The leaf whose parent is the grandparent of leaf v (one rung up), or -1.
int uncle_leaf(const PhyloTree& t, int v) {
  int p = t.parent(v);
  if (p < 0) return -1;
  int g = t.parent(p);
  if (g < 0 || t.children(g).size() != 2) return -1;
  int u = t.children(g)[0] == p ? t.children(g)[1] : t.children(g)[0];
  return t.is_leaf(u) ? u : -1;
}

// Bottom-pair relation: parents equal, or parent(x) is a child of parent(y).
bool bottom_pair(const PhyloTree& t, const std::string& x, const std::string& y) {
  int vx = t.vertex_of(x), vy = t.vertex_of(y);
  if (vx < 0 || vy < 0) return false;
  int px = t.parent(vx), py = t.parent(vy);
  if (px < 0 || py < 0) return false;
  return px == py || t.parent(px) == py;
}

// Strict rung: parent(x) is a child of parent(y).
bool rung(const PhyloTree& t, const std::string& x, const std::string& y) {
  int vx = t.vertex_of(x), vy = t.vertex_of(y);
  if (vx < 0 || vy < 0) return false;
  int px = t.parent(vx), py = t.parent(vy);
  return px >= 0 && py >= 0 && t.parent(px) == py;
}

bool common_bottom_pair(const PhyloTree& t1, const PhyloTree& t2,
                        const std::string& x, const std::string& y) {
  return bottom_pair(t1, x, y) && bottom_pair(t2, x, y);
}

bool is_cherry(const PhyloTree& t, const std::string& x, const std::string& y) {
  int vx = t.vertex_of(x), vy = t.vertex_of(y);
  return vx >= 0 && vy >= 0 && t.parent(vx) >= 0 && t.parent(vx) == t.parent(vy);
}

// The unique leaf one rung above x in both trees, or "".
std::string common_successor(const PhyloTree& t1, const PhyloTree& t2,
                             const std::string& x) {
  int u = uncle_leaf(t1, t1.vertex_of(x));
  if (u < 0) return "";
  const std::string& cand = t1.label(u);
  if (cand == kRho) return "";
  return rung(t2, x, cand) ? cand : "";
}

}  // namespace

bool is_chain(const PhyloTree& t, const std::vector<std::string>& tuple) {
  if (tuple.size() < 2) return false;
  std::set<std::string> seen;
  for (const std::string& l : tuple) {
    if (l == kRho || !t.has_taxon(l) || !seen.insert(l).second) return false;
  }
  if (!bottom_pair(t, tuple[0], tuple[1])) return false;
  for (std::size_t i = 1; i + 1 < tuple.size(); ++i)
    if (!rung(t, tuple[i], tuple[i + 1])) return false;
  return true;
}

bool is_common_chain(const PhyloTree& t1, const PhyloTree& t2,
                     const std::vector<std::string>& tuple) {
  if (is_chain(t1, tuple) && is_chain(t2, tuple)) return true;
  if (tuple.size() < 2) return false;
  std::vector<std::string> swapped = tuple;
  std::swap(swapped[0], swapped[1]);
  return is_chain(t1, swapped) && is_chain(t2, swapped);
}

std::vector<std::vector<std::string>> common_pendant_subtrees(const PhyloTree& t1,
                                                              const PhyloTree& t2) {
  require_same_taxa(t1, t2);
  // Clade sets of t2, keyed by their sorted label list.
  std::map<std::vector<std::string>, int> t2_clades;
  std::function<std::vector<std::string>(int)> collect = [&](int v) {
    std::vector<std::string> out;
    if (t2.is_leaf(v)) {
      out.push_back(t2.label(v));
    } else {
      for (int c : t2.children(v)) {
        auto sub = collect(c);
        out.insert(out.end(), sub.begin(), sub.end());
      }
    }
    std::sort(out.begin(), out.end());
    if (v != t2.root()) t2_clades.emplace(out, v);
    return out;
  };
  collect(t2.root());

  std::vector<std::vector<std::string>> found;
  std::function<std::vector<std::string>(int)> clade1 = [&](int v) {
    std::vector<std::string> out;
    if (t1.is_leaf(v)) {
      out.push_back(t1.label(v));
      return out;
    }
    for (int c : t1.children(v)) {
      auto sub = clade1(c);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  // Top-down: report a clade and stop descending, so results are maximal and
  // disjoint.
  std::function<void(int)> scan = [&](int v) {
    if (t1.is_leaf(v)) return;
    if (v != t1.root()) {
      std::vector<std::string> y = clade1(v);
      auto it = t2_clades.find(y);
      if (y.size() >= 2 && it != t2_clades.end() &&
          PhyloTree::isomorphic(t1.restrict(y), t2.restrict(y))) {
        found.push_back(y);
        return;
      }
    }
    for (int c : t1.children(v)) scan(c);
  };
  scan(t1.root());
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Chain> common_chains(const PhyloTree& t1, const PhyloTree& t2) {
  require_same_taxa(t1, t2);
  std::vector<std::string> leaves;
  for (const std::string& l : t1.taxa())
    if (l != kRho) leaves.push_back(l);

  std::set<std::string> visited;
  std::vector<Chain> out;

  auto predecessors = [&](const std::string& b) {
    // Candidates sit at or just below b's parent in t1.
    std::vector<std::string> cands;
    int vb = t1.vertex_of(b);
    int sib = leaf_sibling(t1, vb);
    if (sib >= 0 && t1.label(sib) != kRho) cands.push_back(t1.label(sib));
    int p = t1.parent(vb);
    if (p >= 0 && t1.children(p).size() == 2) {
      int s = t1.children(p)[0] == vb ? t1.children(p)[1] : t1.children(p)[0];
      if (!t1.is_leaf(s))
        for (int c : t1.children(s))
          if (t1.is_leaf(c) && t1.label(c) != kRho) cands.push_back(t1.label(c));
    }
    std::vector<std::string> preds;
    for (const std::string& x : cands)
      if (common_bottom_pair(t1, t2, x, b)) preds.push_back(x);
    return preds;
  };

  auto grow = [&](std::vector<std::string> tuple) {
    for (;;) {
      std::string next = common_successor(t1, t2, tuple.back());
      if (next.empty() || visited.count(next)) break;
      tuple.push_back(next);
      visited.insert(next);
    }
    Chain c;
    c.leaves = tuple;
    c.bottom_is_cherry =
        is_cherry(t1, tuple[0], tuple[1]) && is_cherry(t2, tuple[0], tuple[1]);
    out.push_back(c);
  };

  for (const std::string& b : leaves) {
    if (visited.count(b)) continue;
    // Shared-parent bottoms: the pair is unordered, handled when the smaller
    // label is reached.
    int sib1 = leaf_sibling(t1, t1.vertex_of(b));
    std::string partner;
    if (sib1 >= 0 && t1.label(sib1) != kRho && is_cherry(t2, b, t1.label(sib1)))
      partner = t1.label(sib1);
    if (!partner.empty() && !visited.count(partner)) {
      visited.insert(b);
      visited.insert(partner);
      grow({b, partner});
      continue;
    }
    if (!predecessors(b).empty()) continue;  // b sits mid-chain
    // Ladder bottom: pick the successor deterministically when the instance
    // admits two incomparable maximal chains through b.
    std::vector<std::string> succs;
    int sib = leaf_sibling(t1, t1.vertex_of(b));
    if (sib >= 0 && t1.label(sib) != kRho && common_bottom_pair(t1, t2, b, t1.label(sib)))
      succs.push_back(t1.label(sib));
    int unc = uncle_leaf(t1, t1.vertex_of(b));
    if (unc >= 0 && t1.label(unc) != kRho && common_bottom_pair(t1, t2, b, t1.label(unc)))
      succs.push_back(t1.label(unc));
    std::sort(succs.begin(), succs.end());
    succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
    std::string s;
    for (const std::string& cand : succs)
      if (!visited.count(cand)) {
        s = cand;
        break;
      }
    if (s.empty()) continue;
    visited.insert(b);
    visited.insert(s);
    grow({b, s});
  }
  return out;
}

}  // namespace hyb
