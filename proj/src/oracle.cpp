#include "dpcover/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace dpcover {

CapacityMatrix CapacityMatrix::uniform(const Graph& g,
                                       const std::vector<int>& row) {
  if (row.empty()) throw std::invalid_argument("empty capacity row");
  CapacityMatrix fm;
  fm.colors = static_cast<int>(row.size());
  for (Vertex v : g.vertices()) fm.rows[v] = row;
  return fm;
}

int CapacityMatrix::at(Vertex v, Color c) const {
  auto it = rows.find(v);
  if (it == rows.end()) throw UnknownVertexError(v);
  if (c < 1 || c > colors)
    throw std::out_of_range("color " + std::to_string(c) + " outside 1.." +
                            std::to_string(colors));
  return it->second[c - 1];
}

CapacityMatrix CapacityMatrix::restricted(const std::set<Vertex>& keep) const {
  CapacityMatrix out;
  out.colors = colors;
  for (Vertex v : keep) {
    auto it = rows.find(v);
    if (it == rows.end()) throw UnknownVertexError(v);
    out.rows[v] = it->second;
  }
  return out;
}

CapacityFunction pick_capacities(const CapacityMatrix& fm,
                                 const RepresentativeSet& r) {
  CapacityFunction f;
  for (const auto& [v, c] : r.picks) f.caps[v] = fm.at(v, c);
  return f;
}

namespace {

// Index-compressed search state.  Vertices become 0..n-1, adjacency and the
// growing representative graph live in 64-bit masks, and per-edge partner
// tables answer H-adjacency in O(1).
struct SearchContext {
  int n = 0;
  int colors = 0;
  std::vector<Vertex> verts;                 // index -> id
  std::vector<std::uint64_t> host_adj;       // host adjacency masks
  std::vector<std::vector<int>> candidate;   // per index: list colors, by
                                             // ascending capacity then color
  std::vector<std::vector<int>> caps;        // per index: capacity by color-1
  // partner[i][j*(colors+1)+c] = color matched at j with (i, c), or 0.
  std::vector<std::vector<int>> partner;

  std::vector<int> order;       // search order (indices)
  std::vector<int> pick;        // color per index, 0 = unset
  std::vector<std::uint64_t> rep_adj;
  std::uint64_t picked = 0;

  bool peeled_ok() const {
    std::uint64_t mask = picked;
    while (mask) {
      std::uint64_t low = 0;
      for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(mask & bit)) continue;
        if (__builtin_popcountll(rep_adj[i] & mask) < caps[i][pick[i] - 1]) {
          low = bit;
          break;
        }
      }
      if (!low) return false;
      mask &= ~low;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const int i = order[depth];
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (int c : candidate[i]) {
      if (caps[i][c - 1] == 0) continue;
      std::uint64_t new_adj = 0;
      std::uint64_t nbrs = host_adj[i] & picked;
      while (nbrs) {
        const int j = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (partner[i][static_cast<std::size_t>(j) * (colors + 1) + c] ==
            pick[j])
          new_adj |= std::uint64_t{1} << j;
      }
      pick[i] = c;
      rep_adj[i] = new_adj;
      picked |= bit;
      std::uint64_t touched = new_adj;
      while (touched) {
        const int j = __builtin_ctzll(touched);
        touched &= touched - 1;
        rep_adj[j] |= bit;
      }
      if (peeled_ok() && search(depth + 1)) return true;
      touched = new_adj;
      while (touched) {
        const int j = __builtin_ctzll(touched);
        touched &= touched - 1;
        rep_adj[j] &= ~bit;
      }
      picked &= ~bit;
      rep_adj[i] = 0;
      pick[i] = 0;
    }
    return false;
  }
};

SearchContext build_context(const Cover& h, const CapacityMatrix& fm,
                            const SolveLimits& limits) {
  const Graph& g = h.host();
  SearchContext ctx;
  ctx.verts = g.vertices();
  ctx.n = static_cast<int>(ctx.verts.size());
  if (ctx.verts.size() > limits.max_vertices)
    throw CombinatorialBlowupError(
        "brute-force solve on " + std::to_string(ctx.verts.size()) +
        " vertices exceeds cap of " + std::to_string(limits.max_vertices));
  ctx.colors = fm.colors;

  std::map<Vertex, int> index;
  for (int i = 0; i < ctx.n; ++i) index[ctx.verts[i]] = i;

  ctx.host_adj.assign(ctx.n, 0);
  ctx.caps.assign(ctx.n, {});
  ctx.candidate.assign(ctx.n, {});
  ctx.partner.assign(ctx.n, {});
  for (int i = 0; i < ctx.n; ++i) {
    const Vertex v = ctx.verts[i];
    for (Vertex w : g.neighbors(v))
      ctx.host_adj[i] |= std::uint64_t{1} << index[w];
    ctx.caps[i].assign(ctx.colors, 0);
    for (int c = 1; c <= ctx.colors; ++c) ctx.caps[i][c - 1] = fm.at(v, c);
    auto lit = h.lists().lists.find(v);
    if (lit != h.lists().lists.end()) {
      for (Color c : lit->second)
        if (c >= 1 && c <= ctx.colors) ctx.candidate[i].push_back(c);
    }
    std::stable_sort(ctx.candidate[i].begin(), ctx.candidate[i].end(),
                     [&](int a, int b) {
                       return ctx.caps[i][a - 1] < ctx.caps[i][b - 1];
                     });
    ctx.partner[i].assign(static_cast<std::size_t>(ctx.n) * (ctx.colors + 1),
                          0);
  }
  for (const auto& [u, v] : g.edges()) {
    const int iu = index[u];
    const int iv = index[v];
    for (const auto& [cu, cv] : h.matching(u, v)) {
      if (cu <= ctx.colors && cv <= ctx.colors) {
        ctx.partner[iu][static_cast<std::size_t>(iv) * (ctx.colors + 1) + cu] =
            cv;
        ctx.partner[iv][static_cast<std::size_t>(iu) * (ctx.colors + 1) + cv] =
            cu;
      }
    }
  }

  ctx.order.resize(ctx.n);
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::stable_sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
    const auto da = __builtin_popcountll(ctx.host_adj[a]);
    const auto db = __builtin_popcountll(ctx.host_adj[b]);
    if (da != db) return da > db;
    return ctx.verts[a] < ctx.verts[b];
  });
  ctx.pick.assign(ctx.n, 0);
  ctx.rep_adj.assign(ctx.n, 0);
  return ctx;
}

}  // namespace

SolveOutcome solve_bruteforce(const Cover& h, const CapacityMatrix& fm,
                              const SolveLimits& limits) {
  SearchContext ctx = build_context(h, fm, limits);
  SolveOutcome out;
  if (!ctx.search(0)) {
    out.status = SolveOutcome::Status::Infeasible;
    return out;
  }
  out.status = SolveOutcome::Status::Found;
  for (int i = 0; i < ctx.n; ++i) out.solution.picks[ctx.verts[i]] = ctx.pick[i];

  // Independent re-check: rebuild the representative graph and its
  // certificate through the public path rather than the search masks.
  const Graph rep = representative_graph(h, out.solution);
  const CapacityFunction fr = pick_capacities(fm, out.solution);
  out.certificate = check_strictly_f_degenerate(rep, fr);
  if (out.certificate.verdict != PeelCertificate::Verdict::Degenerate ||
      !verify_certificate(rep, fr, out.certificate))
    throw InvariantViolationError(
        "search accepted a representative set whose certificate fails");
  return out;
}

AllCoversReport is_dp_colorable_all_covers(const Graph& g,
                                           const CapacityMatrix& fm,
                                           const SolveLimits& limits) {
  CoverEnumerator stream(g, fm.colors, limits.max_covers);
  AllCoversReport report;
  for (std::uint64_t i = 0; i < stream.size(); ++i) {
    Cover h = stream.at(i);
    ++report.covers_checked;
    if (solve_bruteforce(h, fm, limits).status ==
        SolveOutcome::Status::Infeasible) {
      report.colorable = false;
      report.counterexample_index = i;
      report.counterexample = std::move(h);
      return report;
    }
  }
  return report;
}

SolveOutcome partition_via_diagonal(const Graph& g, const CapacityMatrix& fm,
                                    const SolveLimits& limits) {
  const Cover h = diagonal_cover(g, ListAssignment::uniform(g, fm.colors));
  return solve_bruteforce(h, fm, limits);
}

SolveOutcome list_forested_coloring(const Graph& g, const ListAssignment& l,
                                    const SolveLimits& limits) {
  std::set<Color> palette_set;
  for (Vertex v : g.vertices()) {
    auto it = l.lists.find(v);
    if (it == l.lists.end() || it->second.empty())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has no list");
    palette_set.insert(it->second.begin(), it->second.end());
  }
  std::vector<Color> palette(palette_set.begin(), palette_set.end());
  std::map<Color, Color> to_compact;
  for (std::size_t i = 0; i < palette.size(); ++i)
    to_compact[palette[i]] = static_cast<Color>(i + 1);

  ListAssignment compact;
  CapacityMatrix fm;
  fm.colors = static_cast<int>(palette.size());
  for (Vertex v : g.vertices()) {
    std::vector<int> row(palette.size(), 0);
    for (Color c : l.lists.at(v)) {
      compact.lists[v].push_back(to_compact.at(c));
      row[to_compact.at(c) - 1] = 2;
    }
    std::sort(compact.lists[v].begin(), compact.lists[v].end());
    fm.rows[v] = std::move(row);
  }

  SolveOutcome out =
      solve_bruteforce(diagonal_cover(g, compact), fm, limits);
  if (out.status == SolveOutcome::Status::Found) {
    for (auto& [v, c] : out.solution.picks) c = palette[c - 1];
  }
  return out;
}

}  // namespace dpcover
