#include "dpcover/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpcover {

Graph Graph::from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g;
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw SelfLoopError(u);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, nbrs] : adj_) out.push_back(v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
  return twice / 2;
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

const std::set<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw UnknownVertexError(v);
  return it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [v, nbrs] : adj_)
    for (Vertex w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph Graph::induced(const std::set<Vertex>& keep) const {
  Graph out;
  for (Vertex v : keep) {
    if (!has_vertex(v)) throw UnknownVertexError(v);
    out.add_vertex(v);
  }
  for (Vertex v : keep)
    for (Vertex w : neighbors(v))
      if (v < w && keep.count(w)) out.add_edge(v, w);
  return out;
}

Graph Graph::erased(const std::set<Vertex>& drop) const {
  Graph out;
  for (const auto& [v, nbrs] : adj_) {
    if (drop.count(v)) continue;
    out.add_vertex(v);
    for (Vertex w : nbrs)
      if (v < w && !drop.count(w)) out.add_edge(v, w);
  }
  return out;
}

namespace {

struct CycleDfs {
  const std::vector<std::vector<int>>& adj;  // index-based, ascending
  int max_len;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<std::vector<int>>& out;

  void run(int u) {
    int root = path.front();
    for (int w : adj[u]) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
      } else if (w > root && !on_path[w] &&
                 static_cast<int>(path.size()) < max_len) {
        path.push_back(w);
        on_path[w] = 1;
        run(w);
        on_path[w] = 0;
        path.pop_back();
      }
    }
  }
};

}  // namespace

CycleList enumerate_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
  const std::vector<Vertex> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::map<Vertex, int> index;
  for (int i = 0; i < n; ++i) index[vs[i]] = i;

  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (Vertex w : g.neighbors(vs[i])) adj[i].push_back(index[w]);

  std::vector<std::vector<int>> found;
  CycleDfs dfs{adj, max_len, {}, std::vector<char>(n, 0), found};
  for (int r = 0; r < n; ++r) {
    dfs.path.assign(1, r);
    dfs.on_path.assign(n, 0);
    dfs.on_path[r] = 1;
    dfs.run(r);
  }

  CycleList cycles;
  cycles.reserve(found.size());
  for (const auto& idx_cycle : found) {
    Cycle c;
    c.reserve(idx_cycle.size());
    for (int i : idx_cycle) c.push_back(vs[i]);
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return cycles;
}

namespace {

std::set<std::pair<Vertex, Vertex>> cycle_edges(const Cycle& c) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex u = c[i];
    Vertex v = c[(i + 1) % c.size()];
    out.emplace(std::min(u, v), std::max(u, v));
  }
  return out;
}

}  // namespace

std::optional<CyclePairWitness> find_c4_adjacent_c3(const Graph& g) {
  const CycleList cycles = enumerate_cycles(g, 4);
  std::vector<const Cycle*> threes;
  std::vector<const Cycle*> fours;
  for (const Cycle& c : cycles) {
    if (c.size() == 3) threes.push_back(&c);
    if (c.size() == 4) fours.push_back(&c);
  }
  for (const Cycle* four : fours) {
    const auto e4 = cycle_edges(*four);
    for (const Cycle* three : threes) {
      for (const auto& e : cycle_edges(*three)) {
        if (e4.count(e)) return CyclePairWitness{*four, *three};
      }
    }
  }
  return std::nullopt;
}

bool has_c4_adjacent_c3(const Graph& g) {
  return find_c4_adjacent_c3(g).has_value();
}

bool euler_planarity_sanity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return true;
  return g.edge_count() <= 3 * n - 6;
}

}  // namespace dpcover
