#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcover/graph.hpp"

namespace dpcover {

using Color = int;

struct ListAssignment {
  std::map<Vertex, std::vector<Color>> lists;  // ascending, no duplicates

  // Every vertex of g gets the list {1, ..., colors}.
  static ListAssignment uniform(const Graph& g, int colors);

  bool contains(Vertex v, Color c) const;
};

using ColorPair = std::pair<Color, Color>;

// A cover of a host graph: one color list per vertex plus, per host edge, a
// (possibly partial) matching between the two endpoint lists.  The cliques
// inside each fiber {v} x L(v) are implied by the definition and never
// materialised.  Matchings are stored keyed by (min(u,v), max(u,v)) with
// pairs oriented from the smaller endpoint.
class Cover {
 public:
  Cover(Graph host, ListAssignment lists);

  const Graph& host() const { return host_; }
  const ListAssignment& lists() const { return lists_; }

  void add_matched_pair(Vertex u, Color cu, Vertex v, Color cv);
  void set_matching(Vertex u, Vertex v, std::vector<ColorPair> pairs_u_to_v);

  // Pairs oriented so .first is a color at u and .second a color at v.
  std::vector<ColorPair> matching(Vertex u, Vertex v) const;

  // The color at v matched with (u, cu), or nullopt when unmatched or when
  // uv is not a host edge.
  std::optional<Color> matched_partner(Vertex u, Color cu, Vertex v) const;

  const std::map<std::pair<Vertex, Vertex>, std::vector<ColorPair>>&
  matchings() const {
    return matchings_;
  }

  // Sub-cover on the induced host graph.
  Cover restricted(const std::set<Vertex>& keep) const;

 private:
  Graph host_;
  ListAssignment lists_;
  std::map<std::pair<Vertex, Vertex>, std::vector<ColorPair>> matchings_;
};

struct RepresentativeSet {
  std::map<Vertex, Color> picks;
};

struct CoverViolation {
  std::string clause;  // "i", "iii" or "iv"; clause (ii) is structural
  std::string detail;
};

// First violated definition clause, or nullopt when the cover is valid.
std::optional<CoverViolation> validate_cover(const Cover& h);

// Identity matchings on the shared colors of each edge's endpoint lists.
Cover diagonal_cover(const Graph& g, const ListAssignment& l);

// Uniform {1..colors} lists, one uniformly random permutation matching per
// edge.  Deterministic in seed (hand-rolled Fisher-Yates, engine-portable).
Cover random_cover(const Graph& g, int colors, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultMaxCovers = std::uint64_t{1} << 20;

// The stream of all perfect-matching covers with uniform {1..colors} lists:
// one permutation per edge, (colors!)^|E| total.  Edges ascending form the
// digits of a mixed-radix counter (first edge least significant), each digit
// indexing the lexicographic list of permutation words.
class CoverEnumerator {
 public:
  CoverEnumerator(Graph g, int colors,
                  std::uint64_t max_covers = kDefaultMaxCovers);

  std::uint64_t size() const { return count_; }
  Cover at(std::uint64_t index) const;

 private:
  Graph g_;
  int colors_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Color>> perms_;  // lexicographic words on {1..s}
  std::uint64_t count_;
};

// Graph on the host vertices realising exactly the edges whose picked
// colors are matched.  Rejects picks outside lists or not covering V.
Graph representative_graph(const Cover& h, const RepresentativeSet& r);

// True iff the picks form an independent set in the cover, i.e. the
// representative graph has no edges.
bool is_hl_coloring(const Cover& h, const RepresentativeSet& r);

}  // namespace dpcover
