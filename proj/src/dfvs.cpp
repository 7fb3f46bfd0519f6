#include "hyb/dfvs.hpp"

#include <algorithm>
#include <numeric>

#include "hyb/errors.hpp"

namespace hyb {
namespace {

std::vector<char> alive_without(int n, const std::vector<int>& removed) {
  std::vector<char> alive(n, 1);
  for (int v : removed) alive[v] = 0;
  return alive;
}

// Sum of per-cycle cheapest weights over a greedily packed family of
// vertex-disjoint cycles; a valid lower bound for the remaining instance.
long long disjoint_cycle_bound(const WeightedDigraph& g, std::vector<char> alive) {
  long long bound = 0;
  for (;;) {
    std::vector<int> cyc = shortest_cycle(g, alive);
    if (cyc.empty()) return bound;
    long long cheapest = g.weight(cyc[0]);
    for (int v : cyc) {
      cheapest = std::min(cheapest, g.weight(v));
      alive[v] = 0;
    }
    bound += cheapest;
  }
}

struct BranchState {
  const WeightedDigraph& g;
  std::vector<char> alive;
  std::vector<int> chosen;
  long long chosen_weight = 0;
  long long best_weight = -1;
  std::vector<int> best;

  void search() {
    if (best_weight >= 0 &&
        chosen_weight + disjoint_cycle_bound(g, alive) >= best_weight)
      return;
    std::vector<int> cyc = shortest_cycle(g, alive);
    if (cyc.empty()) {
      if (best_weight < 0 || chosen_weight < best_weight) {
        best_weight = chosen_weight;
        best = chosen;
      }
      return;
    }
    std::sort(cyc.begin(), cyc.end());
    for (int v : cyc) {
      alive[v] = 0;
      chosen.push_back(v);
      chosen_weight += g.weight(v);
      search();
      chosen_weight -= g.weight(v);
      chosen.pop_back();
      alive[v] = 1;
    }
  }
};

// Strongly connected component ids (Tarjan, iterative).
std::vector<int> scc_ids(const WeightedDigraph& g, const std::vector<char>& alive) {
  int n = g.vertex_count();
  auto adj = g.out_adjacency();
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0, comps = 0;
  struct Frame {
    int v;
    std::size_t i;
  };
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || idx[s] >= 0) continue;
    std::vector<Frame> frames{{s, 0}};
    idx[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.i < adj[f.v].size()) {
        int w = adj[f.v][f.i++];
        if (!alive[w]) continue;
        if (idx[w] < 0) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        if (low[f.v] == idx[f.v]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == f.v) break;
          }
          ++comps;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

}  // namespace

bool is_fvs(const WeightedDigraph& g, const std::vector<int>& vs) {
  return digraph_is_acyclic(g, alive_without(g.vertex_count(), vs));
}

long long fvs_weight(const WeightedDigraph& g, const std::vector<int>& vs) {
  long long w = 0;
  for (int v : vs) w += g.weight(v);
  return w;
}

std::vector<int> exact_dfvs(const WeightedDigraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw SizeLimit("exact DFVS limited to " + std::to_string(max_vertices) +
                    " vertices, got " + std::to_string(g.vertex_count()));
  BranchState st{g, std::vector<char>(g.vertex_count(), 1), {}, 0, -1, {}};
  // Self-loops are forced into every FVS.
  for (auto [a, b] : g.edges())
    if (a == b && st.alive[a]) {
      st.alive[a] = 0;
      st.chosen.push_back(a);
      st.chosen_weight += g.weight(a);
    }
  // Seed the incumbent so the lower bound prunes from the start.
  std::vector<int> seed = greedy_dfvs(g);
  st.best = seed;
  st.best_weight = fvs_weight(g, seed);
  st.search();
  std::sort(st.best.begin(), st.best.end());
  return st.best;
}

std::vector<int> greedy_dfvs(const WeightedDigraph& g) {
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> picked;
  for (auto [a, b] : g.edges())
    if (a == b && alive[a]) {
      alive[a] = 0;
      picked.push_back(a);
    }
  for (;;) {
    std::vector<int> cyc = shortest_cycle(g, alive);
    if (cyc.empty()) break;
    std::vector<int> comp = scc_ids(g, alive);
    std::vector<long long> ins(n, 0), outs(n, 0);
    for (auto [a, b] : g.edges()) {
      if (!alive[a] || !alive[b] || comp[a] != comp[b]) continue;
      ++outs[a];
      ++ins[b];
    }
    int pick = -1;
    double pick_score = 0;
    std::sort(cyc.begin(), cyc.end());
    for (int v : cyc) {
      double participation = std::max<long long>(1, ins[v] * outs[v]);
      double score = static_cast<double>(g.weight(v)) / participation;
      if (pick < 0 || score < pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    alive[pick] = 0;
    picked.push_back(pick);
  }
  // Minimality pass: drop picks that other picks already cover.
  std::vector<int> result = picked;
  for (int v : picked) {
    std::vector<int> trial;
    for (int u : result)
      if (u != v) trial.push_back(u);
    if (is_fvs(g, trial)) result = trial;
  }
  std::sort(result.begin(), result.end());
  return result;
}

ExpandedDigraph expand_weighted(const WeightedDigraph& g) {
  ExpandedDigraph ex;
  std::vector<std::vector<int>> copies(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (long long i = 1; i <= g.weight(v); ++i) {
      int id = ex.graph.add_vertex(g.name(v) + "." + std::to_string(i));
      copies[v].push_back(id);
      ex.source_of.push_back(v);
    }
  for (auto [a, b] : g.edges())
    for (int ca : copies[a])
      for (int cb : copies[b]) ex.graph.add_edge(ca, cb);
  return ex;
}

std::vector<int> contract_fvs(const WeightedDigraph& g, const ExpandedDigraph& ex,
                              const std::vector<int>& fvs_of_expanded) {
  std::vector<long long> hit(g.vertex_count(), 0);
  for (int v : fvs_of_expanded) hit[ex.source_of[v]] += 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (hit[v] == g.weight(v)) out.push_back(v);
  return out;
}

}  // namespace hyb
