#include "hyb/agreement_forest.hpp"

#include <algorithm>
#include <map>

#include "hyb/errors.hpp"

namespace hyb {
namespace {

std::string component_key(const std::vector<std::string>& comp) {
  for (const std::string& l : comp)
    if (l == kRho) return "";  // rho component sorts first
  return comp.front();
}

}  // namespace

void AgreementForest::normalize() {
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return component_key(a) < component_key(b);
            });
}

int AgreementForest::component_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (std::binary_search(components[i].begin(), components[i].end(), label)) return i;
  return -1;
}

AgreementForest forest_of_components(std::vector<std::vector<std::string>> comps) {
  AgreementForest f;
  f.components = std::move(comps);
  f.normalize();
  return f;
}

bool is_agreement_forest(const AgreementForest& f, const PhyloTree& t1,
                         const PhyloTree& t2, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (t1.taxa() != t2.taxa()) return fail("label sets differ");
  std::vector<std::string> all;
  for (const auto& c : f.components) {
    if (c.empty()) return fail("empty component");
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    return fail("components overlap");
  if (all != t1.taxa()) return fail("not a partition of the taxa");

  // Condition (1): isomorphic restrictions.
  for (const auto& c : f.components)
    if (!PhyloTree::isomorphic(t1.restrict(c), t2.restrict(c)))
      return fail("restrictions differ on component {" + c.front() + ",...}");

  // Condition (2): spanned subtrees vertex-disjoint in each tree.
  for (const PhyloTree* t : {&t1, &t2}) {
    std::vector<char> used(t->vertex_count(), 0);
    for (const auto& c : f.components)
      for (int v : t->spanned_vertices(c)) {
        if (used[v]) return fail("spanned subtrees share a vertex");
        used[v] = 1;
      }
  }
  return true;
}

InheritanceGraph inheritance_graph(const AgreementForest& f, const PhyloTree& t1,
                                   const PhyloTree& t2) {
  InheritanceGraph g;
  g.components = f.components;
  std::vector<int> r1(f.size()), r2(f.size());
  for (int i = 0; i < f.size(); ++i) {
    r1[i] = t1.restriction_root(f.components[i]);
    r2[i] = t2.restriction_root(f.components[i]);
    g.graph.add_vertex(f.components[i].front());
  }
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < f.size(); ++j) {
      if (i == j) continue;
      if (t1.is_ancestor(r1[i], r1[j]) || t2.is_ancestor(r2[i], r2[j]))
        g.graph.add_edge(i, j);
    }
  return g;
}

bool is_acyclic(const InheritanceGraph& g) { return digraph_is_acyclic(g.graph); }

AgreementForest ChainForest::forest() const {
  std::vector<std::vector<std::string>> comps;
  for (const auto& c : chains) comps.push_back(c);
  for (const auto& s : singletons) comps.push_back({s});
  return forest_of_components(std::move(comps));
}

AgreementForest splitting(const ChainForest& bt, const std::set<int>& atomize) {
  std::vector<std::vector<std::string>> comps;
  for (int i = 0; i < bt.chain_count(); ++i) {
    if (atomize.count(i)) {
      for (const auto& l : bt.chains[i]) comps.push_back({l});
    } else {
      comps.push_back(bt.chains[i]);
    }
  }
  for (const auto& s : bt.singletons) comps.push_back({s});
  return forest_of_components(std::move(comps));
}

}  // namespace hyb
