#include "dpcover/constructive.hpp"

#include <algorithm>
#include <sstream>

namespace dpcover {

int config_f_degree(int position) {
  static constexpr int deg[6] = {3, 2, 2, 2, 3, 2};
  return deg[(position - 1) % 6];
}

namespace {

// 0-based ring adjacency: consecutive positions plus the {0,4} chord.
bool ring_adjacent(int p, int q) {
  const int d = (p - q + 6) % 6;
  if (d == 1 || d == 5) return true;
  return (p == 0 && q == 4) || (p == 4 && q == 0);
}

std::string join_ring(const std::array<Vertex, 6>& ring) {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) {
    if (i) os << ' ';
    os << ring[i];
  }
  return os.str();
}

}  // namespace

std::optional<ConfigF> find_config_f(const Graph& g) {
  std::optional<std::array<Vertex, 6>> best;
  for (const Cycle& cyc : enumerate_cycles(g, 6)) {
    if (cyc.size() != 6) continue;
    bool degrees_ok = true;
    for (Vertex v : cyc)
      if (g.degree(v) != 4) degrees_ok = false;
    if (!degrees_ok) continue;
    for (int rot = 0; rot < 6; ++rot) {
      for (int dir : {1, -1}) {
        std::array<Vertex, 6> lab;
        for (int i = 0; i < 6; ++i)
          lab[i] = cyc[((rot + dir * i) % 6 + 6) % 6];
        if (!g.has_edge(lab[0], lab[4])) continue;
        if (!best || lab < *best) best = lab;
      }
    }
  }
  if (!best) return std::nullopt;
  return ConfigF{*best};
}

ResidualCapacities residual_capacities(const CapacityMatrix& fm,
                                       const Cover& h,
                                       const RepresentativeSet& partial,
                                       const ConfigF& f) {
  const std::set<Vertex> ring = f.vertex_set();
  for (const auto& [v, c] : partial.picks) {
    if (ring.count(v))
      throw std::invalid_argument("partial coloring assigns ring vertex " +
                                  std::to_string(v));
  }
  ResidualCapacities out;
  out.colors = fm.colors;
  for (Vertex x : f.ring) {
    std::vector<int> row(fm.colors, 0);
    for (Color i = 1; i <= fm.colors; ++i) {
      int hits = 0;
      for (Vertex v : h.host().neighbors(x)) {
        auto it = partial.picks.find(v);
        if (it == partial.picks.end()) continue;
        const auto j = h.matched_partner(x, i, v);
        if (j && *j == it->second) ++hits;
      }
      row[i - 1] = std::max(0, fm.at(x, i) - hits);
    }
    out.rows[x] = std::move(row);
  }
  return out;
}

namespace {

int positive_count(const ResidualCapacities& r, Vertex x) {
  int count = 0;
  for (int value : r.rows.at(x))
    if (value > 0) ++count;
  return count;
}

}  // namespace

std::optional<int> find_case2_start(const Cover& fcover, const ConfigF& f,
                                    const ResidualCapacities& r) {
  const int s = r.colors;
  // A zero color whose matched partner at the successor is still positive:
  // coloring the partner first costs the configuration nothing.
  for (int k = 1; k <= 6; ++k) {
    const Vertex xk = f.ring[k - 1];
    const Vertex next = f.ring[k % 6];
    for (Color i = 1; i <= s; ++i) {
      if (r.at(xk, i) != 0) continue;
      const auto j = fcover.matched_partner(xk, i, next);
      if (j && r.at(next, *j) >= 1) return k;
    }
  }
  // Partial matchings: a positive successor color with no partner at x_k.
  for (int k = 1; k <= 6; ++k) {
    const Vertex xk = f.ring[k - 1];
    const Vertex next = f.ring[k % 6];
    for (Color j = 1; j <= s; ++j) {
      if (r.at(next, j) >= 1 && !fcover.matched_partner(next, j, xk))
        return k;
    }
  }
  // Every row rich enough that the closing vertex survives on count alone.
  bool all_rich = true;
  for (Vertex x : f.ring)
    if (positive_count(r, x) < 3) all_rich = false;
  if (all_rich) return 2;
  return std::nullopt;
}

RepresentativeSet extend_case2(const Cover& fcover, const ConfigF& f,
                               const ResidualCapacities& r, int k) {
  const int s = r.colors;
  std::array<std::vector<int>, 6> caps;
  for (int p = 0; p < 6; ++p) caps[p] = r.rows.at(f.ring[p]);

  std::array<int, 6> order;  // 0-based positions, x_{k+1} first, x_k last
  for (int i = 0; i < 6; ++i) order[i] = (k + i) % 6;

  RepresentativeSet picks;
  std::array<bool, 6> done{};
  for (int step = 0; step < 6; ++step) {
    const int p = order[step];
    const Vertex x = f.ring[p];
    Color chosen = 0;
    if (step == 0) {
      const Vertex closing = f.ring[k - 1];
      for (Color j = 1; j <= s && !chosen; ++j) {
        if (caps[p][j - 1] < 1) continue;
        const auto partner = fcover.matched_partner(x, j, closing);
        if (!partner || r.at(closing, *partner) == 0) chosen = j;
      }
    }
    for (Color j = 1; j <= s && !chosen; ++j)
      if (caps[p][j - 1] >= 1) chosen = j;
    if (!chosen)
      throw GreedyStuckError("no positive color left at ring vertex " +
                             std::to_string(x));
    picks.picks[x] = chosen;
    done[p] = true;
    for (int q = 0; q < 6; ++q) {
      if (done[q] || !ring_adjacent(p, q)) continue;
      const auto partner = fcover.matched_partner(x, chosen, f.ring[q]);
      if (partner) caps[q][*partner - 1] = std::max(0, caps[q][*partner - 1] - 1);
    }
  }
  return picks;
}

namespace {

// Strict degeneracy of the picked representative graph on the six ring
// vertices, checked with tiny fixed arrays.
bool ring_pick_degenerate(const Cover& fcover, const ConfigF& f,
                          const ResidualCapacities& r,
                          const std::array<Color, 6>& pick) {
  unsigned adj[6] = {0, 0, 0, 0, 0, 0};
  for (int p = 0; p < 6; ++p) {
    for (int q = p + 1; q < 6; ++q) {
      if (!ring_adjacent(p, q)) continue;
      const auto partner =
          fcover.matched_partner(f.ring[p], pick[p], f.ring[q]);
      if (partner && *partner == pick[q]) {
        adj[p] |= 1u << q;
        adj[q] |= 1u << p;
      }
    }
  }
  int caps[6];
  for (int p = 0; p < 6; ++p) caps[p] = r.at(f.ring[p], pick[p]);
  unsigned alive = 0x3f;
  for (int round = 0; round < 6; ++round) {
    int low = -1;
    for (int p = 0; p < 6 && low < 0; ++p) {
      if (!(alive >> p & 1)) continue;
      if (__builtin_popcount(adj[p] & alive) < caps[p]) low = p;
    }
    if (low < 0) return false;
    alive &= ~(1u << low);
  }
  return true;
}

}  // namespace

RepresentativeSet extend_case1(const Cover& fcover, const ConfigF& f,
                               const ResidualCapacities& r) {
  std::array<std::vector<Color>, 6> cand;
  for (int p = 0; p < 6; ++p) {
    const auto& row = r.rows.at(f.ring[p]);
    for (int c = 1; c <= r.colors; ++c)
      if (row[c - 1] > 0) cand[p].push_back(c);
    if (cand[p].empty())
      throw NoExtensionError("ring vertex " + std::to_string(f.ring[p]) +
                             " has no positive residual color");
  }
  std::array<std::size_t, 6> at{};
  while (true) {
    std::array<Color, 6> pick;
    for (int p = 0; p < 6; ++p) pick[p] = cand[p][at[p]];
    if (ring_pick_degenerate(fcover, f, r, pick)) {
      RepresentativeSet out;
      for (int p = 0; p < 6; ++p) out.picks[f.ring[p]] = pick[p];
      return out;
    }
    int p = 5;
    while (p >= 0 && ++at[p] == cand[p].size()) at[p--] = 0;
    if (p < 0) break;
  }
  throw NoExtensionError(
      "no extension on the configuration despite positive residuals");
}

std::optional<LowDegreeStep> reduce_low_degree(const Graph& g,
                                               const CapacityMatrix& fm) {
  for (Vertex v : g.vertices()) {
    const auto& row = fm.rows.at(v);
    int sum = 0;
    for (int value : row) sum += value;
    if (g.degree(v) < sum) {
      std::set<Vertex> rest;
      for (Vertex w : g.vertices())
        if (w != v) rest.insert(w);
      return LowDegreeStep{v, g.erased({v}), fm.restricted(rest)};
    }
  }
  return std::nullopt;
}

namespace {

struct Recursion {
  const Cover& h;
  const CapacityMatrix& fm_full;
  std::vector<std::string>* trace;
  std::map<Vertex, Color> picks;

  void note(const std::string& line) {
    if (trace) trace->push_back(line);
  }

  void run(const Graph& cur, const CapacityMatrix& fm) {
    if (cur.empty()) return;
    if (auto bad = find_c4_adjacent_c3(cur))
      throw InvariantViolationError(
          "subgraph regrew a 4-cycle adjacent to a 3-cycle");

    if (auto step = reduce_low_degree(cur, fm)) {
      note("peel " + std::to_string(step->v));
      run(step->reduced_graph, step->reduced_caps);
      assign_peeled(cur, step->v, fm);
      return;
    }

    const auto config = find_config_f(cur);
    if (!config) {
      std::ostringstream os;
      os << "irreducible subgraph without the chorded-6-cycle configuration;"
         << " vertices:";
      for (Vertex v : cur.vertices()) os << ' ' << v;
      throw NoConfigFError(os.str());
    }
    const std::set<Vertex> ring = config->vertex_set();
    if (cur.induced(ring).edge_count() != 7)
      throw InvariantViolationError(
          "configuration is not induced up to its own seven edges");
    for (int pos = 1; pos <= 6; ++pos) {
      const Vertex x = config->at(pos);
      if (cur.degree(x) - config_f_degree(pos) !=
          (pos == 1 || pos == 5 ? 1 : 2))
        throw InvariantViolationError(
            "unexpected external degree at ring vertex " + std::to_string(x));
    }
    note("configF " + join_ring(config->ring));

    std::set<Vertex> rest;
    for (Vertex v : cur.vertices())
      if (!ring.count(v)) rest.insert(v);
    run(cur.erased(ring), fm.restricted(rest));

    RepresentativeSet partial;
    for (Vertex v : rest) partial.picks[v] = picks.at(v);
    const ResidualCapacities residual =
        residual_capacities(fm, h, partial, *config);
    for (int pos = 1; pos <= 6; ++pos) {
      const auto& row = residual.rows.at(config->at(pos));
      int sum = 0;
      for (int value : row) sum += value;
      if (sum < config_f_degree(pos))
        throw InvariantViolationError(
            "residual row sum below configuration degree at vertex " +
            std::to_string(config->at(pos)));
    }

    const Cover fcover = h.restricted(ring);
    bool all_two = true;
    for (Vertex x : config->ring) {
      int positives = 0;
      for (int value : residual.rows.at(x))
        if (value > 0) ++positives;
      if (positives != 2) all_two = false;
    }

    RepresentativeSet extension;
    if (all_two) {
      note("case1");
      extension = extend_case1(fcover, *config, residual);
    } else {
      const auto k = find_case2_start(fcover, *config, residual);
      if (!k)
        throw InvariantViolationError(
            "no greedy start although some row is not two-positive");
      note("case2 " + std::to_string(*k));
      extension = extend_case2(fcover, *config, residual, *k);
    }

    const Graph rep = representative_graph(fcover, extension);
    const CapacityFunction fr = pick_capacities(residual, extension);
    const PeelCertificate cert = check_strictly_f_degenerate(rep, fr);
    if (cert.verdict != PeelCertificate::Verdict::Degenerate ||
        !verify_certificate(rep, fr, cert))
      throw InvariantViolationError(
          "configuration extension fails its own certificate");
    for (const auto& [v, c] : extension.picks) picks[v] = c;
  }

  void assign_peeled(const Graph& cur, Vertex v, const CapacityMatrix& fm) {
    for (Color i = 1; i <= fm.colors; ++i) {
      int residual = fm.at(v, i);
      for (Vertex u : cur.neighbors(v)) {
        const auto j = h.matched_partner(v, i, u);
        if (j && *j == picks.at(u)) --residual;
      }
      if (residual >= 1) {
        picks[v] = i;
        return;
      }
    }
    throw InvariantViolationError(
        "peeled vertex " + std::to_string(v) +
        " has no color of positive residual despite its low degree");
  }
};

}  // namespace

SolveOutcome dp_color_planar(const Graph& g, const Cover& h,
                             const CapacityMatrix& fm,
                             std::vector<std::string>* trace) {
  if (fm.colors < 2)
    throw HypothesisViolatedError("need at least two colors");
  for (Vertex v : g.vertices()) {
    auto it = fm.rows.find(v);
    if (it == fm.rows.end())
      throw HypothesisViolatedError("no capacity row for vertex " +
                                    std::to_string(v));
    int sum = 0;
    for (int value : it->second) {
      if (value < 0 || value > 2)
        throw HypothesisViolatedError(
            "capacity entries must lie in {0,1,2} (vertex " +
            std::to_string(v) + ")");
      sum += value;
    }
    if (sum < 4)
      throw HypothesisViolatedError("capacity row sum below 4 at vertex " +
                                    std::to_string(v));
    auto lit = h.lists().lists.find(v);
    std::vector<Color> full(fm.colors);
    for (int c = 0; c < fm.colors; ++c) full[c] = c + 1;
    if (lit == h.lists().lists.end() || lit->second != full)
      throw HypothesisViolatedError("vertex " + std::to_string(v) +
                                    " must carry the full list 1.." +
                                    std::to_string(fm.colors));
  }
  if (auto viol = validate_cover(h))
    throw HypothesisViolatedError("invalid cover, clause (" + viol->clause +
                                  "): " + viol->detail);
  if (!euler_planarity_sanity(g))
    throw HypothesisViolatedError(
        "edge count exceeds the planar bound 3|V| - 6");
  if (auto witness = find_c4_adjacent_c3(g)) {
    std::ostringstream os;
    os << "4-cycle";
    for (Vertex v : witness->four_cycle) os << ' ' << v;
    os << " shares an edge with 3-cycle";
    for (Vertex v : witness->triangle) os << ' ' << v;
    throw HypothesisViolatedError(os.str());
  }

  Recursion rec{h, fm, trace, {}};
  rec.run(g, fm);

  SolveOutcome out;
  out.status = SolveOutcome::Status::Found;
  out.solution.picks = std::move(rec.picks);
  const Graph rep = representative_graph(h, out.solution);
  const CapacityFunction fr = pick_capacities(fm, out.solution);
  out.certificate = check_strictly_f_degenerate(rep, fr);
  if (out.certificate.verdict != PeelCertificate::Verdict::Degenerate ||
      !verify_certificate(rep, fr, out.certificate))
    throw InvariantViolationError(
        "constructive coloring fails its final certificate");
  return out;
}

}  // namespace dpcover
