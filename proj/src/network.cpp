#include "hyb/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hyb/errors.hpp"

namespace hyb {

HybridNetwork HybridNetwork::from_tree(const PhyloTree& t) {
  NetworkBuilder nb;
  std::vector<int> id(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) id[v] = nb.add(t.label(v));
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int c : t.children(v)) nb.link(id[v], id[c]);
  return nb.freeze(id[t.root()]);
}

std::vector<int> HybridNetwork::reticulations() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_reticulation(v)) out.push_back(v);
  return out;
}

std::vector<std::string> HybridNetwork::taxa() const {
  std::vector<std::string> out;
  for (const Vertex& v : verts_)
    if (!v.label.empty()) out.push_back(v.label);
  std::sort(out.begin(), out.end());
  return out;
}

int HybridNetwork::hybridization_count() const {
  int h = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (v != root_) h += indegree(v) - 1;
  return h;
}

void HybridNetwork::validate() const {
  if (root_ < 0) throw InvalidInput("network has no root");
  std::set<std::string> labels;
  for (int v = 0; v < vertex_count(); ++v) {
    const Vertex& vx = verts_[v];
    if ((v == root_) != vx.parents.empty())
      throw InvalidInput("network root/indegree mismatch");
    if (vx.parents.size() > 2) throw InvalidInput("vertex indegree above 2");
    if (vx.children.size() > 2) throw InvalidInput("vertex outdegree above 2");
    if (vx.parents.size() == 2 && vx.children.size() > 1)
      throw InvalidInput("reticulation with outdegree above 1");
    if (vx.parents.size() == 1 && vx.children.size() == 1)
      throw InvalidInput("suppressible degree-1-1 vertex");
    if (vx.children.empty() && vx.label.empty())
      throw InvalidInput("unlabelled sink vertex");
    if (!vx.label.empty() && !labels.insert(vx.label).second)
      throw InvalidInput("duplicate label '" + vx.label + "'");
  }
  // Acyclicity.
  std::vector<int> state(vertex_count(), 0);
  std::vector<std::pair<int, size_t>> stack{{root_, 0}};
  state[root_] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < verts_[v].children.size()) {
      int w = verts_[v].children[i++];
      if (state[w] == 1) throw InvalidInput("network contains a directed cycle");
      if (state[w] == 0) {
        state[w] = 1;
        stack.push_back({w, 0});
      }
    } else {
      state[v] = 2;
      stack.pop_back();
    }
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (state[v] != 2) throw InvalidInput("vertex unreachable from the root");
}

int NetworkBuilder::add(const std::string& label) {
  net_.verts_.push_back({label, {}, {}});
  return node_count() - 1;
}

void NetworkBuilder::link(int parent, int child) {
  net_.verts_[parent].children.push_back(child);
  net_.verts_[child].parents.push_back(parent);
}

void NetworkBuilder::unlink(int parent, int child) {
  auto& cs = net_.verts_[parent].children;
  auto itc = std::find(cs.begin(), cs.end(), child);
  if (itc != cs.end()) cs.erase(itc);
  auto& ps = net_.verts_[child].parents;
  auto itp = std::find(ps.begin(), ps.end(), parent);
  if (itp != ps.end()) ps.erase(itp);
}

void NetworkBuilder::simplify() {
  bool again = true;
  while (again) {
    again = false;
    for (int v = 0; v < node_count(); ++v) {
      auto& vx = net_.verts_[v];
      if (vx.parents.size() == 2 && vx.parents[0] == vx.parents[1]) {
        unlink(vx.parents[0], v);
        again = true;
      }
      if (vx.parents.size() == 1 && vx.children.size() == 1 && vx.label.empty()) {
        int p = vx.parents[0], c = vx.children[0];
        unlink(p, v);
        unlink(v, c);
        link(p, c);
        again = true;
      }
    }
  }
}

HybridNetwork NetworkBuilder::freeze(int root) {
  // Compact to vertices reachable from the root.
  std::vector<int> remap(node_count(), -1);
  std::vector<int> order;
  std::vector<int> todo{root};
  remap[root] = 0;
  order.push_back(root);
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int c : net_.verts_[v].children)
      if (remap[c] < 0) {
        remap[c] = static_cast<int>(order.size());
        order.push_back(c);
        todo.push_back(c);
      }
  }
  HybridNetwork out;
  out.verts_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& src = net_.verts_[order[i]];
    out.verts_[i].label = src.label;
    for (int p : src.parents) out.verts_[i].parents.push_back(remap[p]);
    for (int c : src.children) out.verts_[i].children.push_back(remap[c]);
  }
  out.root_ = 0;
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Display check
// ---------------------------------------------------------------------------

bool displays(const HybridNetwork& h, const PhyloTree& t) {
  for (const std::string& l : t.taxa())
    if (l != kRho && std::find(h.taxa().begin(), h.taxa().end(), l) == h.taxa().end())
      throw InvalidInput("tree label '" + l + "' missing from the network");
  std::set<std::string> keep(t.taxa().begin(), t.taxa().end());

  std::vector<int> retics = h.reticulations();
  std::size_t combos = std::size_t{1} << retics.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    // Chosen in-edge per reticulation.
    std::vector<int> chosen_parent(h.vertex_count(), -1);
    for (std::size_t i = 0; i < retics.size(); ++i)
      chosen_parent[retics[i]] = h.vertex(retics[i]).parents[(mask >> i) & 1];

    std::vector<std::vector<int>> kids(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
      for (int c : h.vertex(v).children) {
        if (chosen_parent[c] >= 0 && chosen_parent[c] != v) continue;
        // A parallel pair may select the same parent twice; keep one edge.
        if (chosen_parent[c] >= 0 && !kids[v].empty() &&
            std::find(kids[v].begin(), kids[v].end(), c) != kids[v].end())
          continue;
        kids[v].push_back(c);
      }

    std::vector<char> dead(h.vertex_count(), 0);
    for (int v = 0; v < h.vertex_count(); ++v)
      if (!h.vertex(v).label.empty() && kids[v].empty() && !keep.count(h.vertex(v).label))
        dead[v] = 1;
    // Prune unlabelled sinks bottom-up.
    bool again = true;
    while (again) {
      again = false;
      for (int v = 0; v < h.vertex_count(); ++v) {
        if (dead[v]) continue;
        auto& ks = kids[v];
        ks.erase(std::remove_if(ks.begin(), ks.end(), [&](int c) { return dead[c] == 1; }),
                 ks.end());
        if (ks.empty() && h.vertex(v).label.empty()) {
          dead[v] = 1;
          again = true;
        }
      }
    }

    // Serialize with suppression of unary unlabelled vertices.
    std::function<std::string(int)> canon = [&](int v) -> std::string {
      while (kids[v].size() == 1 && h.vertex(v).label.empty()) v = kids[v][0];
      if (kids[v].empty()) return h.vertex(v).label;
      if (kids[v].size() != 2) return std::string("?invalid");
      std::string a = canon(kids[v][0]);
      std::string b = canon(kids[v][1]);
      if (b < a) std::swap(a, b);
      return "(" + a + "," + b + ")";
    };
    int top = h.root();
    std::string got;
    if (dead[top]) continue;
    if (kids[top].empty()) {
      got = h.vertex(top).label;
    } else {
      // Root is rho with a single pendant edge after cleanup.
      int below = kids[top][0];
      if (kids[top].size() != 1) continue;
      got = "(" + canon(below) + ")" + kRho;
    }
    // Rebuild the comparable canonical string of t the same way.
    if (got == t.canonical_form()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Forest -> network
// ---------------------------------------------------------------------------

namespace {

// Unique label-preserving isomorphism between two restrictions with equal
// canonical form; returns map from vertices of `a` to vertices of `b`.
std::vector<int> match_restrictions(const PhyloTree& a, const PhyloTree& b) {
  std::vector<int> out(a.vertex_count(), -1);
  std::function<void(int, int)> walk = [&](int va, int vb) {
    out[va] = vb;
    auto ka = a.children(va);
    auto kb = b.children(vb);
    if (ka.size() != kb.size()) throw InvalidInput("restriction shapes differ");
    auto by_min = [](const PhyloTree& t, std::vector<int>& ks) {
      std::sort(ks.begin(), ks.end(),
                [&t](int x, int y) { return t.min_leaf(x) < t.min_leaf(y); });
    };
    by_min(a, ka);
    by_min(b, kb);
    for (std::size_t i = 0; i < ka.size(); ++i) walk(ka[i], kb[i]);
  };
  walk(a.root(), b.root());
  return out;
}

}  // namespace

HybridNetwork network_from_forest(const AgreementForest& f, const PhyloTree& t1,
                                  const PhyloTree& t2) {
  std::string why;
  if (!is_agreement_forest(f, t1, t2, &why))
    throw InvalidInput("not an agreement forest: " + why);
  InheritanceGraph ig = inheritance_graph(f, t1, t2);
  if (!is_acyclic(ig)) throw InvalidInput("cyclic forest");

  int k = f.size();
  NetworkBuilder nb;

  // Component copies and reticulations above each non-rho component root.
  std::vector<int> retic(k, -1);
  // Per tree: vertex -> component id (spanned) and vertex -> network image.
  std::vector<int> comp1(t1.vertex_count(), -1), comp2(t2.vertex_count(), -1);
  std::vector<int> image1(t1.vertex_count(), -1), image2(t2.vertex_count(), -1);

  struct CompCopy {
    PhyloTree k1;            // t1 restriction, the shared copy
    std::vector<int> orig1;  // k1 vertex -> t1 vertex
    std::vector<int> net;    // k1 vertex -> network vertex
  };
  std::vector<CompCopy> copies(k);

  for (int i = 0; i < k; ++i) {
    const auto& comp = f.components[i];
    for (int v : t1.spanned_vertices(comp)) comp1[v] = i;
    for (int v : t2.spanned_vertices(comp)) comp2[v] = i;

    CompCopy& cc = copies[i];
    cc.k1 = t1.restrict(comp, &cc.orig1);
    cc.net.resize(cc.k1.vertex_count());
    for (int v = 0; v < cc.k1.vertex_count(); ++v) {
      cc.net[v] = nb.add(cc.k1.label(v));
      image1[cc.orig1[v]] = cc.net[v];
    }
    for (int v = 0; v < cc.k1.vertex_count(); ++v)
      for (int c : cc.k1.children(v)) nb.link(cc.net[v], cc.net[c]);

    std::vector<int> orig2;
    PhyloTree k2 = t2.restrict(comp, &orig2);
    std::vector<int> to_k1 = match_restrictions(k2, cc.k1);
    for (int v = 0; v < k2.vertex_count(); ++v) image2[orig2[v]] = cc.net[to_k1[v]];

    bool is_rho_comp =
        std::find(comp.begin(), comp.end(), std::string(kRho)) != comp.end();
    if (!is_rho_comp) {
      retic[i] = nb.add();
      nb.link(retic[i], cc.net[cc.k1.root()]);
    }
  }

  int net_root = copies[0].net[copies[0].k1.root()];
  int below_root = -1;  // lazily inserted when the rho component is a singleton

  // Network vertex -> surviving t2 vertex, for locating edge paths in t2.
  std::map<int, int> t2_of_net;
  for (int u = 0; u < t2.vertex_count(); ++u)
    if (image2[u] >= 0) t2_of_net[image2[u]] = u;

  // Subdivide each component edge with one vertex per suppressed path vertex
  // of each tree; first-tree points precede second-tree points.
  for (int i = 0; i < k; ++i) {
    CompCopy& cc = copies[i];
    for (int v = 0; v < cc.k1.vertex_count(); ++v)
      for (int c : cc.k1.children(v)) {
        int a1 = cc.orig1[v], b1 = cc.orig1[c];
        std::vector<int> pts1;
        for (int w = t1.parent(b1); w != a1; w = t1.parent(w)) pts1.push_back(w);
        std::reverse(pts1.begin(), pts1.end());

        int nx = cc.net[v], ny = cc.net[c];
        int a2 = t2_of_net.at(nx), b2 = t2_of_net.at(ny);
        std::vector<int> pts2;
        for (int w = t2.parent(b2); w != a2; w = t2.parent(w)) pts2.push_back(w);
        std::reverse(pts2.begin(), pts2.end());

        if (pts1.empty() && pts2.empty()) continue;
        nb.unlink(nx, ny);
        int head = nx;
        for (int w : pts1) {
          int s = nb.add();
          nb.link(head, s);
          image1[w] = s;
          head = s;
        }
        for (int w : pts2) {
          int s = nb.add();
          nb.link(head, s);
          image2[w] = s;
          head = s;
        }
        nb.link(head, ny);
      }
  }

  // Glue pass: translate the remaining edges of each tree.
  auto glue = [&](const PhyloTree& t, const std::vector<int>& comp,
                  std::vector<int>& image) {
    // Connector copies per tree vertex.
    std::vector<int> conn(t.vertex_count(), -1);
    auto source_of = [&](int p) {
      if (comp[p] >= 0) {
        int s = image[p];
        if (s == net_root) {  // keep the augmented root at outdegree 1
          if (below_root < 0) {
            below_root = nb.add();
            nb.link(net_root, below_root);
          }
          return below_root;
        }
        return s;
      }
      if (conn[p] < 0) conn[p] = nb.add();
      return conn[p];
    };
    for (int p = 0; p < t.vertex_count(); ++p)
      for (int c : t.children(p)) {
        if (comp[p] >= 0 && comp[p] == comp[c]) continue;  // realized already
        int src = source_of(p);
        int dst;
        if (comp[c] >= 0) {
          dst = retic[comp[c]];
        } else {
          if (conn[c] < 0) conn[c] = nb.add();
          dst = conn[c];
        }
        nb.link(src, dst);
      }
  };
  glue(t1, comp1, image1);
  glue(t2, comp2, image2);

  nb.simplify();
  return nb.freeze(net_root);
}

// ---------------------------------------------------------------------------
// Generator extraction
// ---------------------------------------------------------------------------

Generator extract_generator(const HybridNetwork& h) {
  int n = h.vertex_count();
  struct Edge {
    int from, to, leaves = 0;
    bool dead = false;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> ins(n), outs(n);  // edge ids
  for (int v = 0; v < n; ++v)
    for (int c : h.vertex(v).children) {
      edges.push_back({v, c, 0, false});
      int id = static_cast<int>(edges.size()) - 1;
      outs[v].push_back(id);
      ins[c].push_back(id);
    }
  std::vector<char> dead(n, 0);
  std::vector<int> dropped_leaves(n, 0);

  auto erase_edge = [&](int id) {
    edges[id].dead = true;
    auto& o = outs[edges[id].from];
    o.erase(std::find(o.begin(), o.end(), id));
    auto& i = ins[edges[id].to];
    i.erase(std::find(i.begin(), i.end(), id));
  };

  // Delete all labelled leaves.
  for (int v = 0; v < n; ++v)
    if (!h.vertex(v).label.empty() && outs[v].empty() && v != h.root()) {
      dead[v] = 1;
      for (int id : std::vector<int>(ins[v].begin(), ins[v].end())) {
        dropped_leaves[edges[id].from] += 1;
        erase_edge(id);
      }
    }
  // Suppress degree-1-1 vertices, merging leaf counts into the new edge.
  bool again = true;
  while (again) {
    again = false;
    for (int v = 0; v < n; ++v) {
      if (dead[v] || v == h.root()) continue;
      if (ins[v].size() == 1 && outs[v].size() == 1) {
        int ein = ins[v][0], eout = outs[v][0];
        Edge merged{edges[ein].from, edges[eout].to,
                    edges[ein].leaves + edges[eout].leaves + dropped_leaves[v], false};
        erase_edge(ein);
        erase_edge(eout);
        dead[v] = 1;
        edges.push_back(merged);
        int id = static_cast<int>(edges.size()) - 1;
        outs[merged.from].push_back(id);
        ins[merged.to].push_back(id);
        again = true;
      }
    }
  }

  Generator g;
  for (int v = 0; v < n; ++v) {
    if (dead[v]) continue;
    std::size_t din = ins[v].size(), dout = outs[v].size();
    if (v == h.root()) {
      if (din != 0 || dout != 1)
        throw InvalidInput("degenerate vertex: root no longer has a single pendant edge");
      continue;
    }
    if (din == 2 && dout == 0) {
      ++g.r0;
      g.node_side_leaves.push_back(dropped_leaves[v]);
    } else if (din == 2 && dout == 1) {
      ++g.r1;
    } else if (din == 1 && dout == 2) {
      ++g.s;
    } else {
      throw InvalidInput("degenerate vertex in generator (displayed pair had a common pendant subtree)");
    }
  }
  for (const Edge& e : edges)
    if (!e.dead) {
      ++g.edge_count;
      g.edge_side_leaves.push_back(e.leaves);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Extended Newick
// ---------------------------------------------------------------------------

namespace {

struct NetWriter {
  const HybridNetwork& h;
  std::map<int, int> tag;          // reticulation -> #H number
  std::map<int, int> tree_parent;  // reticulation -> chosen defining parent
  std::vector<std::string> key;    // structural key per vertex
  std::vector<std::string> out;    // memoized serialization per vertex

  explicit NetWriter(const HybridNetwork& net) : h(net) {
    key.resize(h.vertex_count());
    out.resize(h.vertex_count());
    std::function<std::string(int)> unfold = [&](int v) -> std::string {
      if (!key[v].empty()) return key[v];
      std::string s = h.indegree(v) >= 2 ? "#" : "";
      s += h.vertex(v).label;
      if (h.outdegree(v) > 0) {
        std::vector<std::string> ks;
        for (int c : h.vertex(v).children) ks.push_back(unfold(c));
        std::sort(ks.begin(), ks.end());
        s += "(";
        for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + ks[i];
        s += ")";
      }
      return key[v] = s;
    };
    unfold(h.root());

    // Stable discovery order for tie-breaking.
    std::vector<int> seen_at(h.vertex_count(), -1);
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
      if (seen_at[v] >= 0) return;
      seen_at[v] = counter++;
      for (int c : h.vertex(v).children) dfs(c);
    };
    dfs(h.root());

    std::vector<int> retics = h.reticulations();
    std::sort(retics.begin(), retics.end(), [&](int a, int b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return seen_at[a] < seen_at[b];
    });
    for (std::size_t i = 0; i < retics.size(); ++i) {
      int r = retics[i];
      tag[r] = static_cast<int>(i) + 1;
      std::vector<int> ps = h.vertex(r).parents;
      std::sort(ps.begin(), ps.end(), [&](int a, int b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return seen_at[a] < seen_at[b];
      });
      tree_parent[r] = ps.front();
    }
  }

  std::string definition(int v) {
    if (!out[v].empty()) return out[v];
    std::string s;
    if (h.outdegree(v) > 0) {
      std::vector<std::string> parts;
      for (int c : h.vertex(v).children) parts.push_back(use(c, v));
      std::sort(parts.begin(), parts.end());
      s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
      s += ")";
    }
    s += h.vertex(v).label;
    if (tag.count(v)) s += "#H" + std::to_string(tag[v]);
    return out[v] = s;
  }

  std::string use(int v, int from) {
    if (!tag.count(v)) return definition(v);
    if (tree_parent[v] == from) return definition(v);
    return "#H" + std::to_string(tag[v]);
  }
};

}  // namespace

std::string write_network(const HybridNetwork& h) {
  NetWriter w(h);
  int top = h.root();
  if (h.vertex(top).label == kRho && h.outdegree(top) == 1)
    return w.use(h.vertex(top).children[0], top) + ";";
  return w.definition(top) + ";";
}

HybridNetwork parse_network(const std::string& text) {
  struct Raw {
    std::string label;
    int tag = 0;
    std::vector<int> children;
  };
  std::vector<Raw> raw;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto label_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  };
  std::function<int()> node = [&]() -> int {
    skip();
    Raw r;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      r.children.push_back(node());
      skip();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        r.children.push_back(node());
        skip();
      }
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < text.size() && label_char(text[pos])) ++pos;
      r.label = text.substr(start, pos - start);
    } else {
      std::size_t start = pos;
      while (pos < text.size() && label_char(text[pos])) ++pos;
      r.label = text.substr(start, pos - start);
      if (r.label.empty() && !(pos < text.size() && text[pos] == '#'))
        throw ParseError("expected a node", pos);
    }
    skip();
    if (pos < text.size() && text[pos] == '#') {
      ++pos;
      if (pos >= text.size() || text[pos] != 'H') throw ParseError("expected 'H' after '#'", pos);
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected a reticulation number", pos);
      r.tag = std::stoi(text.substr(start, pos - start));
      skip();
    }
    if (pos < text.size() && text[pos] == ':') {  // lengths tolerated, discarded
      ++pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
              text[pos] == '-' || text[pos] == '+' || text[pos] == 'e' || text[pos] == 'E'))
        ++pos;
    }
    if (r.label == kRho) throw ParseError("label 'rho' is reserved", pos);
    raw.push_back(r);
    return static_cast<int>(raw.size()) - 1;
  };
  int top = node();
  skip();
  if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';'", pos);

  // Merge nodes sharing a #H tag: the occurrence with children or a label
  // defines the vertex, bare occurrences are references.
  std::map<int, int> def;  // tag -> raw id
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    if (raw[i].tag == 0) continue;
    if (!raw[i].children.empty() || !raw[i].label.empty()) {
      if (def.count(raw[i].tag) &&
          (!raw[def[raw[i].tag]].children.empty() || !raw[def[raw[i].tag]].label.empty()))
        throw InvalidInput("reticulation #H" + std::to_string(raw[i].tag) +
                           " defined twice");
      def[raw[i].tag] = i;
    } else if (!def.count(raw[i].tag)) {
      def[raw[i].tag] = -1;  // reference seen before a definition
    }
  }
  for (auto& [t, d] : def)
    if (d < 0) throw InvalidInput("reticulation #H" + std::to_string(t) + " never defined");

  NetworkBuilder nb;
  std::vector<int> id(raw.size(), -1);
  auto canonical_raw = [&](int i) { return raw[i].tag != 0 ? def[raw[i].tag] : i; };
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    int ci = canonical_raw(i);
    if (id[ci] < 0) id[ci] = nb.add(raw[ci].label);
    id[i] = id[ci];
  }
  for (int i = 0; i < static_cast<int>(raw.size()); ++i)
    for (int c : raw[i].children) nb.link(id[canonical_raw(i)], id[canonical_raw(c)]);

  int rho = nb.add(kRho);
  nb.link(rho, id[canonical_raw(top)]);
  return nb.freeze(rho);
}

bool network_isomorphic(const HybridNetwork& a, const HybridNetwork& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  auto keys = [](const HybridNetwork& h) {
    std::vector<std::string> k(h.vertex_count());
    std::function<std::string(int)> unfold = [&](int v) -> std::string {
      if (!k[v].empty()) return k[v];
      std::string s = std::to_string(h.indegree(v)) + "|" + h.vertex(v).label;
      std::vector<std::string> ks;
      for (int c : h.vertex(v).children) ks.push_back(unfold(c));
      std::sort(ks.begin(), ks.end());
      s += "(";
      for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + ks[i];
      s += ")";
      return k[v] = s;
    };
    unfold(h.root());
    return k;
  };
  std::vector<std::string> ka = keys(a), kb = keys(b);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  int n = a.vertex_count();
  std::vector<int> map_ab(n, -1), used(n, 0);
  std::function<bool(int)> assign = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || ka[v] != kb[w]) continue;
      // Edge consistency against vertices already mapped.
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        auto count_edges = [](const HybridNetwork& h, int x, int y) {
          int c = 0;
          for (int z : h.vertex(x).children)
            if (z == y) ++c;
          return c;
        };
        if (count_edges(a, u, v) != count_edges(b, map_ab[u], w)) ok = false;
        if (count_edges(a, v, u) != count_edges(b, w, map_ab[u])) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = 1;
      if (assign(v + 1)) return true;
      used[w] = 0;
      map_ab[v] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace hyb
