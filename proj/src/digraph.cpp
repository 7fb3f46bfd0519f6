#include "hyb/digraph.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "hyb/errors.hpp"

namespace hyb {

int WeightedDigraph::add_vertex(const std::string& name, long long weight) {
  if (vertex(name) >= 0) throw InvalidInput("duplicate vertex '" + name + "'");
  if (weight < 1) throw InvalidInput("non-positive weight for vertex '" + name + "'");
  names_.push_back(name);
  weights_.push_back(weight);
  return vertex_count() - 1;
}

void WeightedDigraph::add_edge(int from, int to) { edges_.emplace_back(from, to); }

void WeightedDigraph::add_edge(const std::string& from, const std::string& to) {
  int a = vertex(from), b = vertex(to);
  if (a < 0) throw InvalidInput("undeclared edge endpoint '" + from + "'");
  if (b < 0) throw InvalidInput("undeclared edge endpoint '" + to + "'");
  add_edge(a, b);
}

int WeightedDigraph::vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return -1;
}

std::vector<std::vector<int>> WeightedDigraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (auto [a, b] : edges_) adj[a].push_back(b);
  return adj;
}

std::vector<std::vector<int>> WeightedDigraph::in_adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (auto [a, b] : edges_) adj[b].push_back(a);
  return adj;
}

WeightedDigraph parse_digraph(const std::string& text) {
  WeightedDigraph g;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "v") {
      std::string name;
      if (!(ls >> name)) throw ParseError("vertex record needs a name", line_start);
      long long w = 1;
      std::string wtok;
      if (ls >> wtok) {
        try {
          std::size_t used = 0;
          w = std::stoll(wtok, &used);
          if (used != wtok.size()) throw std::invalid_argument(wtok);
        } catch (const std::exception&) {
          throw ParseError("bad weight '" + wtok + "'", line_start);
        }
      }
      if (w < 1) throw ParseError("weight must be a positive integer", line_start);
      g.add_vertex(name, w);
    } else if (kind == "e") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError("edge record needs two endpoints", line_start);
      g.add_edge(a, b);
    } else {
      throw ParseError("unknown record '" + kind + "'", line_start);
    }
  }
  return g;
}

std::string write_digraph(const WeightedDigraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "v " << g.name(v) << " " << g.weight(v) << "\n";
  for (auto [a, b] : g.edges()) out << "e " << g.name(a) << " " << g.name(b) << "\n";
  return out.str();
}

bool digraph_is_acyclic(const WeightedDigraph& g, const std::vector<char>& alive) {
  int n = g.vertex_count();
  std::vector<char> live = alive.empty() ? std::vector<char>(n, 1) : alive;
  auto adj = g.out_adjacency();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (!live[s] || state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (!live[w]) continue;
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<int> shortest_cycle(const WeightedDigraph& g, const std::vector<char>& alive) {
  int n = g.vertex_count();
  std::vector<char> live = alive.empty() ? std::vector<char>(n, 1) : alive;
  auto adj = g.out_adjacency();
  // Self-loops first.
  for (auto [a, b] : g.edges())
    if (a == b && live[a]) return {a};
  std::vector<int> best;
  // BFS from every vertex back to itself.
  std::vector<int> prev(n), dist(n);
  for (int s = 0; s < n; ++s) {
    if (!live[s]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> q;
    dist[s] = 0;
    q.push_back(s);
    int closing = -1;
    while (!q.empty() && closing < 0) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v]) {
        if (!live[w]) continue;
        if (w == s) {
          closing = v;
          break;
        }
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          prev[w] = v;
          q.push_back(w);
        }
      }
    }
    if (closing < 0) continue;
    std::vector<int> cyc;
    for (int v = closing; v != s; v = prev[v]) cyc.push_back(v);
    cyc.push_back(s);
    std::reverse(cyc.begin(), cyc.end());
    if (best.empty() || cyc.size() < best.size()) best = cyc;
    if (best.size() == 2) break;  // cannot beat a 2-cycle once self-loops are gone
  }
  return best;
}

}  // namespace hyb
