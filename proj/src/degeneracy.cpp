#include "dpcover/degeneracy.hpp"

#include <algorithm>

namespace dpcover {

CapacityFunction CapacityFunction::uniform(const Graph& g, int value) {
  CapacityFunction f;
  for (Vertex v : g.vertices()) f.caps[v] = value;
  return f;
}

int CapacityFunction::at(Vertex v) const {
  auto it = caps.find(v);
  if (it == caps.end()) throw UnknownVertexError(v);
  return it->second;
}

PeelCertificate check_strictly_f_degenerate(const Graph& g,
                                            const CapacityFunction& f) {
  std::map<Vertex, std::set<Vertex>> adj;
  for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);

  PeelCertificate cert;
  while (!adj.empty()) {
    Vertex low = 0;
    bool found = false;
    for (const auto& [v, nbrs] : adj) {
      if (static_cast<int>(nbrs.size()) < f.at(v)) {
        low = v;
        found = true;
        break;
      }
    }
    if (!found) {
      cert.verdict = PeelCertificate::Verdict::Stuck;
      cert.order.clear();
      for (const auto& [v, nbrs] : adj) cert.witness.insert(v);
      return cert;
    }
    cert.order.push_back(low);
    for (Vertex w : adj[low]) adj[w].erase(low);
    adj.erase(low);
  }
  cert.verdict = PeelCertificate::Verdict::Degenerate;
  return cert;
}

bool verify_certificate(const Graph& g, const CapacityFunction& f,
                        const PeelCertificate& c) {
  const std::vector<Vertex> vs = g.vertices();
  if (c.verdict == PeelCertificate::Verdict::Degenerate) {
    std::vector<Vertex> sorted = c.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vs) return false;
    std::set<Vertex> removed;
    for (Vertex v : c.order) {
      int deg = 0;
      for (Vertex w : g.neighbors(v))
        if (!removed.count(w)) ++deg;
      if (deg >= f.at(v)) return false;
      removed.insert(v);
    }
    return true;
  }
  if (c.witness.empty()) return false;
  for (Vertex v : c.witness) {
    if (!g.has_vertex(v)) return false;
    int deg = 0;
    for (Vertex w : g.neighbors(v))
      if (c.witness.count(w)) ++deg;
    if (deg < f.at(v)) return false;
  }
  return true;
}

bool brute_force_degeneracy(const Graph& g, const CapacityFunction& f,
                            std::size_t max_vertices) {
  const std::vector<Vertex> vs = g.vertices();
  const std::size_t n = vs.size();
  if (n > max_vertices)
    throw CombinatorialBlowupError(
        "brute-force degeneracy on " + std::to_string(n) +
        " vertices exceeds cap of " + std::to_string(max_vertices));
  if (n == 0) return true;

  std::vector<std::uint64_t> adj(n, 0);
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vs[i]] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex w : g.neighbors(vs[i])) adj[i] |= std::uint64_t{1} << index[w];

  std::vector<int> caps(n);
  for (std::size_t i = 0; i < n; ++i) caps[i] = f.at(vs[i]);

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    bool has_low = false;
    for (std::size_t i = 0; i < n && !has_low; ++i) {
      if (!(mask >> i & 1)) continue;
      if (__builtin_popcountll(adj[i] & mask) < caps[i]) has_low = true;
    }
    if (!has_low) return false;
  }
  return true;
}

}  // namespace dpcover
