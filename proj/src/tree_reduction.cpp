#include "hyb/tree_reduction.hpp"

#include <algorithm>
#include <set>

#include "hyb/chains.hpp"
#include "hyb/errors.hpp"

namespace hyb {
namespace {

std::string fresh_label(const std::string& stem, int& counter, const PhyloTree& t1,
                        const PhyloTree& t2) {
  for (;;) {
    std::string cand = stem + std::to_string(++counter);
    if (!t1.has_taxon(cand) && !t2.has_taxon(cand)) return cand;
  }
}

// Replace the clade `labels` (pendant in t) by a single fresh leaf: keep one
// representative and rename it.
PhyloTree collapse_pendant(const PhyloTree& t, const std::vector<std::string>& labels,
                           const std::string& fresh) {
  std::set<std::string> drop(labels.begin() + 1, labels.end());
  std::vector<std::string> keep;
  for (const std::string& l : t.taxa())
    if (!drop.count(l)) keep.push_back(l);
  return t.restrict(keep).relabel({{labels.front(), fresh}});
}

}  // namespace

int ReducedInstance::reduced_taxa() const { return s.leaf_count() - 1; }

const ReducedChain* ReducedInstance::chain_by_labels(const std::string& a,
                                                     const std::string& b) const {
  for (const ReducedChain& c : p)
    if (c.a == a && c.b == b) return &c;
  return nullptr;
}

SubtreeReduction reduce_subtrees(const PhyloTree& t1, const PhyloTree& t2) {
  SubtreeReduction r{t1, t2, {}};
  int counter = 0;
  for (;;) {
    auto common = common_pendant_subtrees(r.t1, r.t2);
    if (common.empty()) break;
    for (const auto& y : common) {
      std::string fresh = fresh_label("st", counter, r.t1, r.t2);
      r.t1 = collapse_pendant(r.t1, y, fresh);
      r.t2 = collapse_pendant(r.t2, y, fresh);
      r.map.emplace_back(fresh, y);
    }
  }
  return r;
}

ReducedInstance reduce_pair(const PhyloTree& t1, const PhyloTree& t2) {
  if (t1.taxa() != t2.taxa()) throw InvalidInput("label sets differ");
  SubtreeReduction sub = reduce_subtrees(t1, t2);
  ReducedInstance inst;
  inst.s = sub.t1;
  inst.s_prime = sub.t2;
  inst.subtree_map = std::move(sub.map);

  int counter = 0;
  std::set<std::string> reduced_labels;
  for (;;) {
    bool reduced_any = false;
    for (const Chain& c : common_chains(inst.s, inst.s_prime)) {
      if (c.leaves.size() < 3) continue;
      // Reductions never recreate a reducible chain over fresh labels.
      for (const std::string& l : c.leaves)
        if (reduced_labels.count(l))
          throw InvalidInput("chain reduction revisited a reduced label");
      std::string la, lb;
      for (;;) {
        ++counter;
        la = "ca" + std::to_string(counter);
        lb = "cb" + std::to_string(counter);
        if (!inst.s.has_taxon(la) && !inst.s.has_taxon(lb) &&
            !inst.s_prime.has_taxon(la) && !inst.s_prime.has_taxon(lb))
          break;
      }
      std::vector<std::string> interior(c.leaves.begin() + 2, c.leaves.end());
      std::map<std::string, std::string> ren{{c.leaves[0], la}, {c.leaves[1], lb}};
      inst.s = inst.s.delete_taxa(interior).relabel(ren);
      inst.s_prime = inst.s_prime.delete_taxa(interior).relabel(ren);
      inst.p.push_back(ReducedChain{la, lb, c.leaves});
      reduced_labels.insert(la);
      reduced_labels.insert(lb);
      reduced_any = true;
    }
    if (!reduced_any) break;
  }
  return inst;
}

int forest_weight(const AgreementForest& f, const ReducedInstance& inst) {
  int w = f.size() - 1;
  for (const ReducedChain& c : inst.p) {
    int ia = f.component_of(c.a), ib = f.component_of(c.b);
    if (ia < 0 || ib < 0) throw InvalidInput("forest misses a chain label");
    bool atomized = f.components[ia].size() == 1 && f.components[ib].size() == 1;
    if (atomized) w += c.weight();
  }
  return w;
}

bool is_legitimate(const AgreementForest& f, const ReducedInstance& inst) {
  InheritanceGraph g = inheritance_graph(f, inst.s, inst.s_prime);
  if (!is_acyclic(g)) return false;
  for (const ReducedChain& c : inst.p) {
    int ia = f.component_of(c.a), ib = f.component_of(c.b);
    if (ia < 0 || ib < 0) return false;
    bool survives = ia == ib;
    bool atomized = f.components[ia].size() == 1 && f.components[ib].size() == 1;
    if (!survives && !atomized) return false;
  }
  return true;
}

AgreementForest expand_forest(const AgreementForest& f, const ReducedInstance& inst) {
  if (!is_legitimate(f, inst)) throw InvalidInput("forest is not legitimate");
  std::vector<std::vector<std::string>> comps = f.components;
  // Chains first: their originals may still contain subtree labels.
  for (const ReducedChain& c : inst.p) {
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
      for (const std::string& l : comps[i]) {
        if (l == c.a) ia = i;
        if (l == c.b) ib = i;
      }
    }
    if (ia == ib) {  // survives: splice the original tuple into the component
      auto& comp = comps[ia];
      comp.erase(std::remove_if(comp.begin(), comp.end(),
                                [&](const std::string& l) { return l == c.a || l == c.b; }),
                 comp.end());
      comp.insert(comp.end(), c.original.begin(), c.original.end());
    } else {  // atomized: one singleton per original leaf
      comps[ia] = {c.original.front()};
      comps[ib] = {c.original[1]};
      for (std::size_t i = 2; i < c.original.size(); ++i) comps.push_back({c.original[i]});
    }
  }
  // Subtree labels expand in place, newest first so nested replacements resolve.
  for (auto it = inst.subtree_map.rbegin(); it != inst.subtree_map.rend(); ++it) {
    for (auto& comp : comps) {
      auto pos = std::find(comp.begin(), comp.end(), it->first);
      if (pos != comp.end()) {
        comp.erase(pos);
        comp.insert(comp.end(), it->second.begin(), it->second.end());
        break;
      }
    }
  }
  return forest_of_components(std::move(comps));
}

bool check_kernel_bound(const ReducedInstance& inst, int h) {
  if (h < 1) throw InvalidInput("kernel bound requires h >= 1");
  return inst.reduced_taxa() < 9 * h;
}

std::pair<ChainForest, ChainForest> chain_forest(const PhyloTree& t1,
                                                 const PhyloTree& t2,
                                                 const ReducedInstance& inst) {
  if (!common_pendant_subtrees(t1, t2).empty())
    throw InvalidInput("chain forest requires a pair without common pendant subtrees");

  ChainForest bs, bt;
  bs.over_original = false;
  bt.over_original = true;

  std::set<std::string> in_chain;
  std::set<std::string> reduced_labels;
  for (const ReducedChain& c : inst.p) {
    reduced_labels.insert(c.a);
    reduced_labels.insert(c.b);
  }
  for (int i = 0; i < static_cast<int>(inst.p.size()); ++i) {
    const ReducedChain& c = inst.p[i];
    bs.chains.push_back({c.a, c.b});
    bs.reduced_index.push_back(i);
    bt.chains.push_back(c.original);
    bt.reduced_index.push_back(i);
    in_chain.insert(c.a);
    in_chain.insert(c.b);
  }
  // Unreduced chains: maximal common 2-chains of (S, S') on original labels.
  for (const Chain& c : common_chains(inst.s, inst.s_prime)) {
    bool touches_reduced = false;
    for (const std::string& l : c.leaves)
      if (reduced_labels.count(l)) touches_reduced = true;
    if (touches_reduced) continue;
    if (c.leaves.size() != 2)
      throw InvalidInput("reduced pair still has a long common chain");
    if (!is_common_chain(t1, t2, c.leaves))
      throw InvalidInput("unreduced chain is not a chain of the original pair");
    bs.chains.push_back(c.leaves);
    bs.reduced_index.push_back(-1);
    bt.chains.push_back(c.leaves);
    bt.reduced_index.push_back(-1);
    for (const std::string& l : c.leaves) in_chain.insert(l);
  }
  for (const std::string& l : inst.s.taxa())
    if (!in_chain.count(l)) bs.singletons.push_back(l);
  for (const std::string& l : t1.taxa())
    if (!in_chain.count(l)) {
      bool from_reduced = false;
      for (const ReducedChain& c : inst.p)
        for (const std::string& o : c.original)
          if (o == l) from_reduced = true;
      if (!from_reduced) bt.singletons.push_back(l);
    }
  return {bs, bt};
}

}  // namespace hyb
