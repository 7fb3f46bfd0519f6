#include "hyb/hybrid_to_dfvs.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "hyb/dfvs.hpp"
#include "hyb/errors.hpp"

namespace hyb {

int AuxiliaryGraph::chain_of_vertex(int v) const {
  for (int i = 0; i < static_cast<int>(chain_vertex.size()); ++i)
    if (chain_vertex[i] == v) return i;
  return -1;
}

bool AuxiliaryGraph::is_barred(int v) const {
  return std::find(barred_vertex.begin(), barred_vertex.end(), v) != barred_vertex.end();
}

AuxiliaryGraph build_auxiliary_graph(const ChainForest& bt, const PhyloTree& t1,
                                     const PhyloTree& t2) {
  AuxiliaryGraph aux;
  aux.s = bt.non_chain_count();
  InheritanceGraph ig = inheritance_graph(bt.forest(), t1, t2);

  // Forest components are ordered; recover which correspond to chains.
  std::map<std::string, int> chain_by_min;
  for (int i = 0; i < bt.chain_count(); ++i) {
    std::string key = *std::min_element(bt.chains[i].begin(), bt.chains[i].end());
    chain_by_min[key] = i;
  }
  aux.chain_vertex.assign(bt.chain_count(), -1);
  aux.barred_vertex.assign(bt.chain_count(), -1);
  std::vector<int> chain_of_component(ig.components.size(), -1);
  for (std::size_t c = 0; c < ig.components.size(); ++c) {
    auto it = chain_by_min.find(ig.components[c].front());
    if (it != chain_by_min.end() && ig.components[c].size() >= 2)
      chain_of_component[c] = it->second;
  }
  for (std::size_t c = 0; c < ig.components.size(); ++c) {
    int i = chain_of_component[c];
    if (i < 0) continue;  // non-chain taxa carry no vertex
    aux.chain_vertex[i] =
        aux.graph.add_vertex(ig.graph.name(static_cast<int>(c)),
                             static_cast<long long>(bt.chains[i].size()));
  }
  for (auto [a, b] : ig.graph.edges()) {
    int ia = chain_of_component[a], ib = chain_of_component[b];
    if (ia < 0 || ib < 0) continue;
    aux.graph.add_edge(aux.chain_vertex[ia], aux.chain_vertex[ib]);
  }
  for (int i = 0; i < bt.chain_count(); ++i) {
    aux.barred_vertex[i] =
        aux.graph.add_vertex(aux.graph.name(aux.chain_vertex[i]) + ".bar", 1);
    aux.graph.add_edge(aux.chain_vertex[i], aux.barred_vertex[i]);
    aux.graph.add_edge(aux.barred_vertex[i], aux.chain_vertex[i]);
  }
  return aux;
}

std::vector<int> normalize_fvs(const AuxiliaryGraph& aux, const std::vector<int>& fvs) {
  std::vector<char> chosen(std::max(1, aux.graph.vertex_count()), 0);
  for (int v : fvs) chosen[v] = 1;
  std::vector<int> out;
  for (int v : fvs) {
    bool redundant = false;
    for (int i = 0; i < static_cast<int>(aux.barred_vertex.size()); ++i)
      if (aux.barred_vertex[i] == v && chosen[aux.chain_vertex[i]]) redundant = true;
    if (!redundant) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AgreementForest fvs_to_splitting(const AuxiliaryGraph& aux, const ChainForest& bt,
                                 const std::vector<int>& fvs) {
  if (!is_fvs(aux.graph, fvs)) throw InvalidInput("not a feedback vertex set");
  std::vector<int> normalized = normalize_fvs(aux, fvs);
  std::vector<char> selected(std::max(1, aux.graph.vertex_count()), 0);
  for (int v : normalized) selected[v] = 1;
  std::set<int> atomize;
  for (int i = 0; i < bt.chain_count(); ++i)
    if (selected[aux.chain_vertex[i]]) atomize.insert(i);
  return splitting(bt, atomize);
}

std::vector<int> splitting_to_fvs(const AuxiliaryGraph& aux,
                                  const std::set<int>& atomized) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(aux.chain_vertex.size()); ++i)
    out.push_back(atomized.count(i) ? aux.chain_vertex[i] : aux.barred_vertex[i]);
  std::sort(out.begin(), out.end());
  return out;
}

ApproxResult approximate_hybridization(const PhyloTree& t1, const PhyloTree& t2,
                                       DfvsSolver solver, int exact_cap) {
  if (t1.taxa() != t2.taxa()) throw InvalidInput("label sets differ");
  auto started = std::chrono::steady_clock::now();
  ApproxResult res;
  res.solver = solver == DfvsSolver::kExact ? "exact" : "greedy";

  if (PhyloTree::isomorphic(t1, t2)) {
    res.hybridization_number = 0;
    res.forest = forest_of_components({t1.taxa()});
    res.network = HybridNetwork::from_tree(t1);
    res.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - started)
                      .count();
    return res;
  }

  SubtreeReduction sub = reduce_subtrees(t1, t2);
  ReducedInstance inst = reduce_pair(sub.t1, sub.t2);
  res.reduced_taxa = inst.reduced_taxa();

  auto [bs, bt] = chain_forest(sub.t1, sub.t2, inst);
  res.chain_forest_size = bt.size();
  res.non_chain_elements = bt.non_chain_count();

  AuxiliaryGraph aux = build_auxiliary_graph(bt, sub.t1, sub.t2);
  std::vector<int> fvs = solver == DfvsSolver::kExact
                             ? exact_dfvs(aux.graph, exact_cap)
                             : greedy_dfvs(aux.graph);
  std::vector<int> normalized = normalize_fvs(aux, fvs);
  res.fvs_weight = fvs_weight(aux.graph, normalized);

  AgreementForest reduced_forest = fvs_to_splitting(aux, bt, normalized);
  // Re-inflate the pendant subtrees collapsed before the chain machinery.
  std::vector<std::vector<std::string>> comps = reduced_forest.components;
  for (auto it = sub.map.rbegin(); it != sub.map.rend(); ++it) {
    for (auto& comp : comps) {
      auto pos = std::find(comp.begin(), comp.end(), it->first);
      if (pos != comp.end()) {
        comp.erase(pos);
        comp.insert(comp.end(), it->second.begin(), it->second.end());
        break;
      }
    }
  }
  res.forest = forest_of_components(std::move(comps));

  std::string why;
  if (!is_agreement_forest(res.forest, t1, t2, &why))
    throw InvalidInput("pipeline produced an invalid forest: " + why);
  if (!is_acyclic(inheritance_graph(res.forest, t1, t2)))
    throw InvalidInput("pipeline produced a cyclic forest");

  res.hybridization_number = res.forest.size() - 1;
  res.network = network_from_forest(res.forest, t1, t2);
  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - started)
                    .count();
  return res;
}

}  // namespace hyb
