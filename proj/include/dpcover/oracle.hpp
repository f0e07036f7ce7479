#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dpcover/cover.hpp"
#include "dpcover/degeneracy.hpp"

namespace dpcover {

// One capacity row (f_1(v), ..., f_s(v)) per vertex, colors 1-based.
struct CapacityMatrix {
  int colors = 0;
  std::map<Vertex, std::vector<int>> rows;

  static CapacityMatrix uniform(const Graph& g, const std::vector<int>& row);

  int at(Vertex v, Color c) const;
  CapacityMatrix restricted(const std::set<Vertex>& keep) const;
};

struct SolveLimits {
  std::size_t max_vertices = 12;
  std::uint64_t max_covers = kDefaultMaxCovers;
};

struct SolveOutcome {
  enum class Status { Found, Infeasible };
  Status status = Status::Infeasible;
  RepresentativeSet solution;    // Found only
  PeelCertificate certificate;   // Found only: peel order of G_R under f_R
};

// f_R(v) = f_{pick(v)}(v).
CapacityFunction pick_capacities(const CapacityMatrix& fm,
                                 const RepresentativeSet& r);

// Exhaustive backtracking over representative sets.  Vertices are tried by
// descending host degree, colors by ascending capacity; a partial pick is
// abandoned as soon as the picked induced representative graph is already
// stuck (stuckness is monotone under adding vertices and edges).  A Found
// outcome is re-verified through the public certificate path before return;
// an Infeasible outcome is exhaustive.
SolveOutcome solve_bruteforce(const Cover& h, const CapacityMatrix& fm,
                              const SolveLimits& limits = {});

struct AllCoversReport {
  bool colorable = true;
  std::uint64_t covers_checked = 0;
  std::optional<std::uint64_t> counterexample_index;
  std::optional<Cover> counterexample;
};

// Quantifies over every perfect-matching cover (lowest enumeration index
// wins as counterexample).  Sufficient for all covers: any cover is an
// edge-subgraph of a perfect-matching cover and dropping matched pairs never
// adds representative-graph edges.
AllCoversReport is_dp_colorable_all_covers(const Graph& g,
                                           const CapacityMatrix& fm,
                                           const SolveLimits& limits = {});

// Diagonal-cover solve with uniform {1..s} lists; a Found outcome is exactly
// a partition of V into classes V_i inducing strictly f_i-degenerate
// subgraphs.
SolveOutcome partition_via_diagonal(const Graph& g, const CapacityMatrix& fm,
                                    const SolveLimits& limits = {});

// List-forest coloring bridge: capacity 2 on the listed colors, 0 elsewhere,
// diagonal cover.  Found means every color class induces a forest; the
// returned picks use the original colors of l.
SolveOutcome list_forested_coloring(const Graph& g, const ListAssignment& l,
                                    const SolveLimits& limits = {});

}  // namespace dpcover
