#pragma once

// Vertex-weighted directed multigraphs (self-loops and parallel edges
// allowed) and their line-based file format:
//   v <name> [<weight>]      weight defaults to 1
//   e <from> <to>
//   # comment
// Endpoints must be declared before use; weights are positive integers.

#include <string>
#include <utility>
#include <vector>

namespace hyb {

class WeightedDigraph {
 public:
  int add_vertex(const std::string& name, long long weight = 1);
  void add_edge(int from, int to);
  void add_edge(const std::string& from, const std::string& to);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  long long weight(int v) const { return weights_[v]; }
  int vertex(const std::string& name) const;  // -1 when absent
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<std::vector<int>> out_adjacency() const;
  std::vector<std::vector<int>> in_adjacency() const;

 private:
  std::vector<std::string> names_;
  std::vector<long long> weights_;
  std::vector<std::pair<int, int>> edges_;
};

WeightedDigraph parse_digraph(const std::string& text);
std::string write_digraph(const WeightedDigraph& g);

// Acyclicity of the subgraph induced by vertices with alive[v] != 0; an
// empty mask means the whole graph.
bool digraph_is_acyclic(const WeightedDigraph& g, const std::vector<char>& alive = {});

// A shortest directed cycle among alive vertices, as a vertex list; empty
// when the induced subgraph is acyclic. Deterministic.
std::vector<int> shortest_cycle(const WeightedDigraph& g, const std::vector<char>& alive = {});

}  // namespace hyb
