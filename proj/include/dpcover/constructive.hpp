#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dpcover/oracle.hpp"

namespace dpcover {

// A 6-cycle x1..x6 with the chord x1x5 whose six vertices all have host
// degree exactly 4.  ring[k-1] holds x_k; the chord is {ring[0], ring[4]}.
// Degrees inside the configuration: 3 at x1 and x5, 2 elsewhere.
struct ConfigF {
  std::array<Vertex, 6> ring;

  Vertex at(int position) const { return ring[(position - 1) % 6]; }
  std::set<Vertex> vertex_set() const {
    return std::set<Vertex>(ring.begin(), ring.end());
  }
};

// Degree in the configuration by 1-based ring position.
int config_f_degree(int position);

// Lexicographically least valid labelling over all 6-cycles, rotations and
// reflections; nullopt when the pattern is absent.  Does not require the
// configuration to be induced (hosts violating the cycle hypothesis may
// carry extra edges among the six vertices).
std::optional<ConfigF> find_config_f(const Graph& g);

// Capacities left on the configuration after an external partial coloring:
// f*_i(x_k) = max(0, f_i(x_k) - #{(v, j) in partial H-adjacent to (x_k, i)}).
// partial must assign exactly the host vertices outside the configuration.
using ResidualCapacities = CapacityMatrix;

ResidualCapacities residual_capacities(const CapacityMatrix& fm,
                                       const Cover& h,
                                       const RepresentativeSet& partial,
                                       const ConfigF& f);

// Start index for the greedy extension, scanning positions 1..6:
//  - first a position k holding a zero residual color whose matched partner
//    at x_{k+1} still has positive residual (coloring that partner costs the
//    configuration nothing);
//  - then, for partial matchings, a position whose successor has a positive
//    color with no partner at x_k at all;
//  - finally k = 2 when every row has at least three positive colors, where
//    the closing vertex survives on count alone.
// nullopt means every row has exactly two positive colors bijectively
// matched around the ring, which is the exhaustive-search case.
std::optional<int> find_case2_start(const Cover& fcover, const ConfigF& f,
                                    const ResidualCapacities& r);

// Greedy extension in ring order x_{k+1}, ..., x_k (indices mod 6, chord
// handled through configuration adjacency).  The first vertex prefers a
// positive color that cannot hurt x_k; every later vertex takes its lowest
// positive color; each pick decrements the matched color of yet-uncolored
// configuration neighbours, clamped at zero.  fcover is the cover restricted
// to the six ring vertices.  Throws GreedyStuck when some vertex runs out of
// positive colors (impossible when the start index came from
// find_case2_start on admissible residuals).
RepresentativeSet extend_case2(const Cover& fcover, const ConfigF& f,
                               const ResidualCapacities& r, int k);

// Exhaustive search over picks with positive residual (x1 most significant,
// colors ascending); returns the first pick whose representative graph on
// the configuration is strictly residual-degenerate.  Throws NoExtension
// when none exists -- on admissible residual rows that contradicts the
// theorem and is treated as a failure of the highest severity.
RepresentativeSet extend_case1(const Cover& fcover, const ConfigF& f,
                               const ResidualCapacities& r);

// Lowest-id vertex with d(v) < f_1(v) + ... + f_s(v), if any, plus the
// instance with it removed.  Capacity rows are not altered: the removed
// vertex is colored last with any color of positive residual.
struct LowDegreeStep {
  Vertex v;
  Graph reduced_graph;
  CapacityMatrix reduced_caps;
};

std::optional<LowDegreeStep> reduce_low_degree(const Graph& g,
                                               const CapacityMatrix& fm);

// Constructive solver for planar graphs without a 4-cycle adjacent to a
// 3-cycle, capacity rows with entries in {0,1,2} summing to at least 4.
// Recursion: peel low-degree vertices first; otherwise locate the chorded
// 6-cycle configuration, solve the rest, compute residuals and extend by
// CASE 1 (every row exactly two positive colors) or CASE 2 (otherwise).
// Always returns Found with a verified certificate; HypothesisViolated when
// the input lies outside the theorem, NoConfigF when an irreducible graph
// lacks the configuration (archival event: contradicts the structure lemma).
// When trace is non-null it receives one line per step: "peel v",
// "configF x1 .. x6", "case1", "case2 k".
SolveOutcome dp_color_planar(const Graph& g, const Cover& h,
                             const CapacityMatrix& fm,
                             std::vector<std::string>* trace = nullptr);

}  // namespace dpcover
