#pragma once

// Reference implementations kept deliberately naive; the test suite plays
// them against the library's optimised code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dpcover/oracle.hpp"

namespace testutil {

inline std::vector<std::pair<dpcover::Vertex, dpcover::Vertex>> complete_edges(
    int n) {
  std::vector<std::pair<dpcover::Vertex, dpcover::Vertex>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

// Labeled graph on {1..n} whose edge set is selected by a bitmask over
// complete_edges(n); isolated vertices are kept.
inline dpcover::Graph graph_from_mask(int n, std::uint64_t mask) {
  const auto all = complete_edges(n);
  dpcover::Graph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask >> i & 1) g.add_edge(all[i].first, all[i].second);
  return g;
}

inline bool is_forest(const dpcover::Graph& g) {
  std::map<dpcover::Vertex, dpcover::Vertex> parent;
  for (auto v : g.vertices()) parent[v] = v;
  auto find = [&parent](dpcover::Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    const auto ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

// Counts cycles by the definition: a vertex subset contributes one cycle per
// Hamiltonian cycle of its induced subgraph (permutations, halved for the
// two directions).
inline std::size_t naive_cycle_count(const dpcover::Graph& g, int max_len) {
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::size_t total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<dpcover::Vertex> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(verts[i]);
    const int k = static_cast<int>(sub.size());
    if (k < 3 || k > max_len) continue;
    std::vector<dpcover::Vertex> rest(sub.begin() + 1, sub.end());
    std::size_t closed = 0;
    do {
      bool ok = g.has_edge(sub[0], rest.front()) &&
                g.has_edge(rest.back(), sub[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok) ++closed;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += closed / 2;
  }
  return total;
}

// Every pick from the lists, tested against the degeneracy definition.
inline bool naive_dp_solvable(const dpcover::Cover& h,
                              const dpcover::CapacityMatrix& fm) {
  const auto verts = h.host().vertices();
  if (verts.empty()) return true;
  std::vector<std::size_t> at(verts.size(), 0);
  while (true) {
    dpcover::RepresentativeSet r;
    for (std::size_t i = 0; i < verts.size(); ++i)
      r.picks[verts[i]] = h.lists().lists.at(verts[i])[at[i]];
    const auto rep = dpcover::representative_graph(h, r);
    if (dpcover::brute_force_degeneracy(rep, dpcover::pick_capacities(fm, r)))
      return true;
    std::size_t i = 0;
    while (i < verts.size() &&
           ++at[i] == h.lists().lists.at(verts[i]).size())
      at[i++] = 0;
    if (i == verts.size()) return false;
  }
}

// Every coloring from the lists, each color class checked to induce a forest.
inline bool naive_list_forested(const dpcover::Graph& g,
                                const dpcover::ListAssignment& l) {
  const auto verts = g.vertices();
  if (verts.empty()) return true;
  std::vector<std::size_t> at(verts.size(), 0);
  while (true) {
    std::map<dpcover::Color, std::set<dpcover::Vertex>> classes;
    for (std::size_t i = 0; i < verts.size(); ++i)
      classes[l.lists.at(verts[i])[at[i]]].insert(verts[i]);
    bool ok = true;
    for (const auto& [c, members] : classes)
      if (!is_forest(g.induced(members))) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < verts.size() &&
           ++at[i] == l.lists.at(verts[i]).size())
      at[i++] = 0;
    if (i == verts.size()) return false;
  }
}

// Full public verification chain for a claimed solution.
inline bool certified_solution(const dpcover::Cover& h,
                               const dpcover::CapacityMatrix& fm,
                               const dpcover::RepresentativeSet& r) {
  const auto rep = dpcover::representative_graph(h, r);
  const auto f = dpcover::pick_capacities(fm, r);
  const auto cert = dpcover::check_strictly_f_degenerate(rep, f);
  return cert.verdict == dpcover::PeelCertificate::Verdict::Degenerate &&
         dpcover::verify_certificate(rep, f, cert);
}

}  // namespace testutil
