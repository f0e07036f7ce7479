#include "dpcover/cover.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dpcover {

ListAssignment ListAssignment::uniform(const Graph& g, int colors) {
  if (colors < 1) throw std::invalid_argument("need at least one color");
  std::vector<Color> full(colors);
  for (int c = 0; c < colors; ++c) full[c] = c + 1;
  ListAssignment out;
  for (Vertex v : g.vertices()) out.lists[v] = full;
  return out;
}

bool ListAssignment::contains(Vertex v, Color c) const {
  auto it = lists.find(v);
  return it != lists.end() &&
         std::binary_search(it->second.begin(), it->second.end(), c);
}

Cover::Cover(Graph host, ListAssignment lists)
    : host_(std::move(host)), lists_(std::move(lists)) {}

void Cover::add_matched_pair(Vertex u, Color cu, Vertex v, Color cv) {
  if (u == v) throw SelfLoopError(u);
  if (u < v)
    matchings_[{u, v}].emplace_back(cu, cv);
  else
    matchings_[{v, u}].emplace_back(cv, cu);
  auto& pairs = matchings_[{std::min(u, v), std::max(u, v)}];
  std::sort(pairs.begin(), pairs.end());
}

void Cover::set_matching(Vertex u, Vertex v,
                         std::vector<ColorPair> pairs_u_to_v) {
  if (u == v) throw SelfLoopError(u);
  if (u > v) {
    for (auto& p : pairs_u_to_v) std::swap(p.first, p.second);
    std::swap(u, v);
  }
  std::sort(pairs_u_to_v.begin(), pairs_u_to_v.end());
  matchings_[{u, v}] = std::move(pairs_u_to_v);
}

std::vector<ColorPair> Cover::matching(Vertex u, Vertex v) const {
  auto it = matchings_.find({std::min(u, v), std::max(u, v)});
  if (it == matchings_.end()) return {};
  std::vector<ColorPair> pairs = it->second;
  if (u > v) {
    for (auto& p : pairs) std::swap(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
  }
  return pairs;
}

std::optional<Color> Cover::matched_partner(Vertex u, Color cu,
                                            Vertex v) const {
  auto it = matchings_.find({std::min(u, v), std::max(u, v)});
  if (it == matchings_.end()) return std::nullopt;
  const bool forward = u < v;
  for (const auto& [a, b] : it->second) {
    if (forward && a == cu) return b;
    if (!forward && b == cu) return a;
  }
  return std::nullopt;
}

Cover Cover::restricted(const std::set<Vertex>& keep) const {
  ListAssignment sub;
  for (Vertex v : keep) {
    auto it = lists_.lists.find(v);
    if (it != lists_.lists.end()) sub.lists[v] = it->second;
  }
  Cover out(host_.induced(keep), std::move(sub));
  for (const auto& [edge, pairs] : matchings_) {
    if (keep.count(edge.first) && keep.count(edge.second))
      out.matchings_[edge] = pairs;
  }
  return out;
}

std::optional<CoverViolation> validate_cover(const Cover& h) {
  const Graph& g = h.host();
  for (Vertex v : g.vertices()) {
    auto it = h.lists().lists.find(v);
    if (it == h.lists().lists.end() || it->second.empty())
      return CoverViolation{"i", "vertex " + std::to_string(v) +
                                     " has no colors"};
    const auto& l = it->second;
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
      if (l[i] >= l[i + 1])
        return CoverViolation{"i", "list of vertex " + std::to_string(v) +
                                       " is not strictly ascending"};
  }
  for (const auto& [v, l] : h.lists().lists) {
    if (!g.has_vertex(v))
      return CoverViolation{"i", "list for non-host vertex " +
                                     std::to_string(v)};
  }
  for (const auto& [edge, pairs] : h.matchings()) {
    const auto [u, v] = edge;
    const std::string uv =
        std::to_string(u) + " " + std::to_string(v);
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.has_edge(u, v))
      return CoverViolation{"iv", "matching on non-edge " + uv};
    for (const auto& [cu, cv] : pairs) {
      if (!h.lists().contains(u, cu) || !h.lists().contains(v, cv))
        return CoverViolation{
            "i", "matching on edge " + uv + " mentions color " +
                     std::to_string(h.lists().contains(u, cu) ? cv : cu) +
                     " outside the endpoint list"};
    }
    std::set<Color> left, right;
    for (const auto& [cu, cv] : pairs) {
      if (!left.insert(cu).second || !right.insert(cv).second)
        return CoverViolation{"iii", "matching on edge " + uv +
                                         " repeats an endpoint color"};
    }
  }
  return std::nullopt;
}

Cover diagonal_cover(const Graph& g, const ListAssignment& l) {
  Cover h(g, l);
  for (const auto& [u, v] : g.edges()) {
    auto lu = l.lists.find(u);
    auto lv = l.lists.find(v);
    if (lu == l.lists.end() || lv == l.lists.end())
      throw UnknownVertexError(lu == l.lists.end() ? u : v);
    std::vector<ColorPair> pairs;
    for (Color c : lu->second)
      if (l.contains(v, c)) pairs.emplace_back(c, c);
    h.set_matching(u, v, std::move(pairs));
  }
  return h;
}

Cover random_cover(const Graph& g, int colors, std::uint64_t seed) {
  if (colors < 1) throw std::invalid_argument("need at least one color");
  std::mt19937_64 rng(seed);
  Cover h(g, ListAssignment::uniform(g, colors));
  for (const auto& [u, v] : g.edges()) {
    std::vector<Color> image(colors);
    for (int c = 0; c < colors; ++c) image[c] = c + 1;
    for (int i = colors - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(image[i], image[j]);
    }
    std::vector<ColorPair> pairs;
    for (int c = 0; c < colors; ++c) pairs.emplace_back(c + 1, image[c]);
    h.set_matching(u, v, std::move(pairs));
  }
  return h;
}

namespace {

std::vector<std::vector<Color>> permutation_words(int s) {
  std::vector<Color> word(s);
  for (int c = 0; c < s; ++c) word[c] = c + 1;
  std::vector<std::vector<Color>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace

CoverEnumerator::CoverEnumerator(Graph g, int colors,
                                 std::uint64_t max_covers)
    : g_(std::move(g)), colors_(colors) {
  if (colors < 1) throw std::invalid_argument("need at least one color");
  if (colors > 8)
    throw CombinatorialBlowupError("permutation alphabet of " +
                                   std::to_string(colors) +
                                   " colors is too large to stream");
  edges_ = g_.edges();
  perms_ = permutation_words(colors);
  const std::uint64_t radix = perms_.size();
  count_ = 1;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (count_ > max_covers / radix || count_ * radix > max_covers)
      throw CombinatorialBlowupError(
          "perfect-matching cover stream exceeds cap of " +
          std::to_string(max_covers) + " covers");
    count_ *= radix;
  }
}

Cover CoverEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("cover index out of range");
  Cover h(g_, ListAssignment::uniform(g_, colors_));
  const std::uint64_t radix = perms_.size();
  for (const auto& [u, v] : edges_) {
    const auto& word = perms_[index % radix];
    index /= radix;
    std::vector<ColorPair> pairs;
    for (int c = 0; c < colors_; ++c) pairs.emplace_back(c + 1, word[c]);
    h.set_matching(u, v, std::move(pairs));
  }
  return h;
}

Graph representative_graph(const Cover& h, const RepresentativeSet& r) {
  const Graph& g = h.host();
  for (Vertex v : g.vertices()) {
    auto it = r.picks.find(v);
    if (it == r.picks.end())
      throw InvalidPickError("no pick for vertex " + std::to_string(v));
    if (!h.lists().contains(v, it->second))
      throw InvalidPickError("pick " + std::to_string(it->second) +
                             " outside the list of vertex " +
                             std::to_string(v));
  }
  for (const auto& [v, c] : r.picks) {
    if (!g.has_vertex(v))
      throw InvalidPickError("pick for non-host vertex " + std::to_string(v));
  }
  Graph out;
  for (Vertex v : g.vertices()) out.add_vertex(v);
  for (const auto& [u, v] : g.edges()) {
    const auto partner = h.matched_partner(u, r.picks.at(u), v);
    if (partner && *partner == r.picks.at(v)) out.add_edge(u, v);
  }
  return out;
}

bool is_hl_coloring(const Cover& h, const RepresentativeSet& r) {
  return representative_graph(h, r).edge_count() == 0;
}

}  // namespace dpcover
