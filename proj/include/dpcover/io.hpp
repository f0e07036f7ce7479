#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dpcover/constructive.hpp"

namespace dpcover {

// Edge list: one edge per line as two base-10 ids, full-line # comments,
// blank lines ignored.  Parse errors carry 1-based line numbers.
Graph parse_edge_list(std::istream& in);
Graph load_graph_file(const std::string& path);
std::string format_edge_list(const Graph& g);

// Cover file: a "lists" section with one "v: c1 c2 ... ck" line per vertex,
// then either a "matchings" section with one "u v: i->j, i->j" line per
// host edge (u < v; omitted edges mean empty matchings) or the single
// keyword "diagonal".
Cover parse_cover(std::istream& in, const Graph& host);
Cover load_cover_file(const std::string& path, const Graph& host);
std::string format_cover(const Cover& h);

// Capacity file: one "v: f1 f2 ... fs" line per vertex, uniform s.
CapacityMatrix parse_capacities(std::istream& in, const Graph& host);
CapacityMatrix load_capacities_file(const std::string& path,
                                    const Graph& host);
std::string format_capacities(const CapacityMatrix& fm);

// Representative set: one "v: c" line per vertex.
RepresentativeSet parse_representative_set(std::istream& in);
std::string format_representative_set(const RepresentativeSet& r);

// Outcome text: a status line, then representative-set lines, then
// certificate lines ("peel v" per removal, or "witness v1 v2 ...").
std::string format_outcome(const SolveOutcome& o);

std::uint64_t fnv1a64(std::string_view data);
std::uint64_t cover_hash(const Cover& h);

}  // namespace dpcover
