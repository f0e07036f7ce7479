#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dpcover/errors.hpp"

namespace dpcover {

using Vertex = int;

// Simple undirected graph over integer vertex ids.  Adjacency stays
// symmetric; self-loops are rejected and parallel edges collapse silently.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges);

  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
  bool has_edge(Vertex u, Vertex v) const;

  std::vector<Vertex> vertices() const;  // ascending
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return adj_.empty(); }

  int degree(Vertex v) const;
  const std::set<Vertex>& neighbors(Vertex v) const;

  // Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph induced(const std::set<Vertex>& keep) const;
  Graph erased(const std::set<Vertex>& drop) const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<Vertex, std::set<Vertex>> adj_;
};

using Cycle = std::vector<Vertex>;
using CycleList = std::vector<Cycle>;

// Every cycle of length 3..max_len, once per rotation/reflection class.
// Each cycle is reported starting at its smallest vertex with the smaller
// of its two neighbours on the cycle second.  Requires max_len >= 3.
CycleList enumerate_cycles(const Graph& g, int max_len);

struct CyclePairWitness {
  Cycle four_cycle;
  Cycle triangle;
};

// A 4-cycle and a 3-cycle counting as adjacent when they share at least one
// edge (vertex-only contact does not qualify).
std::optional<CyclePairWitness> find_c4_adjacent_c3(const Graph& g);
bool has_c4_adjacent_c3(const Graph& g);

// Necessary condition only: |E| <= 3|V| - 6 for |V| >= 3, vacuous below.
bool euler_planarity_sanity(const Graph& g);

}  // namespace dpcover
