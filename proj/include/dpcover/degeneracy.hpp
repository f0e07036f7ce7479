#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "dpcover/graph.hpp"

namespace dpcover {

struct CapacityFunction {
  std::map<Vertex, int> caps;  // nonnegative

  static CapacityFunction uniform(const Graph& g, int value);

  int at(Vertex v) const;
};

// Either a full removal order proving strict f-degeneracy, or a stuck vertex
// set on which every vertex has induced degree >= f(v).
struct PeelCertificate {
  enum class Verdict { Degenerate, Stuck };
  Verdict verdict = Verdict::Degenerate;
  std::vector<Vertex> order;   // Degenerate: covers V(g) exactly
  std::set<Vertex> witness;    // Stuck: nonempty
};

// Greedy peel, always removing the lowest-id vertex with d(v) < f(v) in the
// remaining induced subgraph.  Correct as a decision procedure because
// removing vertices never raises degrees.
PeelCertificate check_strictly_f_degenerate(const Graph& g,
                                            const CapacityFunction& f);

// Independent replay of a certificate; quadratic and unoptimised on purpose.
bool verify_certificate(const Graph& g, const CapacityFunction& f,
                        const PeelCertificate& c);

// Literal definition: every nonempty subset of V induces a subgraph with a
// vertex of degree < f(v).  Throws CombinatorialBlowup above max_vertices.
bool brute_force_degeneracy(const Graph& g, const CapacityFunction& f,
                            std::size_t max_vertices = 12);

}  // namespace dpcover
