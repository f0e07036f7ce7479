#include <doctest.h>

#include "dpcover/constructive.hpp"
#include "dpcover/io.hpp"
#include "helpers.hpp"

using namespace dpcover;

namespace {

ConfigF ring_123456() { return ConfigF{{1, 2, 3, 4, 5, 6}}; }

ResidualCapacities rows6(int colors,
                         const std::array<std::vector<int>, 6>& rows) {
  ResidualCapacities r;
  r.colors = colors;
  for (int p = 0; p < 6; ++p) r.rows[p + 1] = rows[p];
  return r;
}

Cover chorded_diagonal(int colors = 2) {
  const Graph g = load_graph_file("data/chorded_c6.txt");
  return diagonal_cover(g, ListAssignment::uniform(g, colors));
}

Graph circulant_13_1_5() {
  Graph g;
  for (int v = 1; v <= 13; ++v) {
    g.add_edge(v, v % 13 + 1);
    g.add_edge(v, (v + 4) % 13 + 1);
  }
  return g;
}

}  // namespace

TEST_CASE("configuration shape") {
  CHECK(config_f_degree(1) == 3);
  CHECK(config_f_degree(2) == 2);
  CHECK(config_f_degree(3) == 2);
  CHECK(config_f_degree(4) == 2);
  CHECK(config_f_degree(5) == 3);
  CHECK(config_f_degree(6) == 2);

  const ConfigF f = ring_123456();
  CHECK(f.at(1) == 1);
  CHECK(f.at(6) == 6);
  CHECK(f.at(7) == 1);  // ring position after x6
  CHECK(f.vertex_set() == std::set<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("configuration search") {
  CHECK(!find_config_f(load_graph_file("data/chorded_c6.txt")).has_value());
  CHECK(!find_config_f(load_graph_file("data/c5.txt")).has_value());

  const auto octa = find_config_f(load_graph_file("data/octahedron.txt"));
  REQUIRE(octa.has_value());
  CHECK(octa->ring == std::array<Vertex, 6>{1, 2, 3, 4, 5, 6});

  const Graph icosi = load_graph_file("data/icosidodecahedron.txt");
  const auto found = find_config_f(icosi);
  REQUIRE(found.has_value());
  CHECK(found->ring == std::array<Vertex, 6>{1, 2, 18, 17, 5, 4});
  for (int pos = 1; pos <= 6; ++pos) {
    CHECK(icosi.degree(found->at(pos)) == 4);
    CHECK(icosi.has_edge(found->at(pos), found->at(pos + 1)));
  }
  CHECK(icosi.has_edge(found->at(1), found->at(5)));
}

TEST_CASE("residual capacities count matched colored neighbors") {
  Graph g = load_graph_file("data/chorded_c6.txt");
  g.add_edge(1, 7);
  g.add_edge(4, 7);
  const Cover h = diagonal_cover(g, ListAssignment::uniform(g, 2));
  const CapacityMatrix fm = CapacityMatrix::uniform(g, {2, 2});

  RepresentativeSet partial;
  partial.picks[7] = 1;
  const ResidualCapacities r =
      residual_capacities(fm, h, partial, ring_123456());
  CHECK(r.rows.at(1) == std::vector<int>{1, 2});
  CHECK(r.rows.at(4) == std::vector<int>{1, 2});
  CHECK(r.rows.at(2) == std::vector<int>{2, 2});
  CHECK(r.rows.at(6) == std::vector<int>{2, 2});

  CapacityMatrix tight = fm;
  tight.rows[1] = {0, 2};
  const ResidualCapacities clamped =
      residual_capacities(tight, h, partial, ring_123456());
  CHECK(clamped.rows.at(1) == std::vector<int>{0, 2});  // clamped at zero

  RepresentativeSet bad;
  bad.picks[3] = 1;
  CHECK_THROWS_AS(residual_capacities(fm, h, bad, ring_123456()),
                  std::invalid_argument);
}

TEST_CASE("greedy start detection") {
  const Cover h = chorded_diagonal();
  const ConfigF f = ring_123456();

  const auto none = find_case2_start(
      h, f, rows6(2, {{{2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}}));
  CHECK(!none.has_value());
  CHECK(!find_case2_start(
             h, f,
             rows6(2, {{{1, 2}, {2, 1}, {1, 1}, {2, 2}, {2, 1}, {1, 1}}}))
             .has_value());

  // zero color at x2 whose partner at x3 is positive
  CHECK(find_case2_start(
            h, f,
            rows6(2, {{{2, 2}, {0, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}})) ==
        2);
  CHECK(find_case2_start(
            h, f,
            rows6(2, {{{0, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}})) ==
        1);

  // three positive colors everywhere: the walk may start anywhere
  const Cover h3 = chorded_diagonal(3);
  CHECK(find_case2_start(h3, f,
                         rows6(3, {{{2, 2, 2},
                                    {2, 2, 2},
                                    {2, 2, 2},
                                    {2, 2, 2},
                                    {2, 2, 2},
                                    {2, 2, 2}}})) == 2);

  // partial matching: color 2 at x2 has no partner at x1
  Cover partial = chorded_diagonal();
  partial.set_matching(1, 2, {{1, 1}});
  CHECK(find_case2_start(
            partial, f,
            rows6(2, {{{2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}})) ==
        1);
}

TEST_CASE("case 2 walks the ring greedily") {
  const Cover h = chorded_diagonal();
  const ConfigF f = ring_123456();
  const ResidualCapacities r =
      rows6(2, {{{2, 2}, {0, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}});
  REQUIRE(find_case2_start(h, f, r) == 2);

  const RepresentativeSet picks = extend_case2(h, f, r, 2);
  const std::map<Vertex, Color> expected = {{1, 2}, {2, 2}, {3, 1},
                                            {4, 1}, {5, 1}, {6, 1}};
  CHECK(picks.picks == expected);
  CHECK(testutil::certified_solution(h, r, picks));

  const ResidualCapacities dead =
      rows6(2, {{{2, 2}, {2, 2}, {2, 2}, {0, 0}, {2, 2}, {2, 2}}});
  CHECK_THROWS_AS(extend_case2(h, f, dead, 2), GreedyStuckError);
}

TEST_CASE("case 1 scans picks in odometer order") {
  const ConfigF f = ring_123456();
  const ResidualCapacities r =
      rows6(2, {{{2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}, {2, 2}}});

  const RepresentativeSet diag_picks = extend_case1(chorded_diagonal(), f, r);
  const std::map<Vertex, Color> diag_expected = {{1, 1}, {2, 1}, {3, 1},
                                                 {4, 1}, {5, 2}, {6, 1}};
  CHECK(diag_picks.picks == diag_expected);
  CHECK(testutil::certified_solution(chorded_diagonal(), r, diag_picks));

  Cover swapped = chorded_diagonal();
  swapped.set_matching(1, 2, {{1, 2}, {2, 1}});
  const RepresentativeSet swap_picks = extend_case1(swapped, f, r);
  const std::map<Vertex, Color> swap_expected = {{1, 1}, {2, 1}, {3, 1},
                                                 {4, 1}, {5, 1}, {6, 2}};
  CHECK(swap_picks.picks == swap_expected);
  CHECK(testutil::certified_solution(swapped, r, swap_picks));

  const ResidualCapacities starved =
      rows6(2, {{{2, 2}, {2, 2}, {0, 0}, {2, 2}, {2, 2}, {2, 2}}});
  CHECK_THROWS_AS(extend_case1(chorded_diagonal(), f, starved),
                  NoExtensionError);
}

TEST_CASE("low degree reduction") {
  const Graph c5 = load_graph_file("data/c5.txt");
  const auto step = reduce_low_degree(c5, CapacityMatrix::uniform(c5, {2, 2}));
  REQUIRE(step.has_value());
  CHECK(step->v == 1);
  CHECK(step->reduced_graph == c5.erased({1}));
  CHECK(step->reduced_caps.rows.size() == 4);
  CHECK(!step->reduced_caps.rows.count(1));

  Graph star;
  for (int leaf = 2; leaf <= 5; ++leaf) star.add_edge(1, leaf);
  const auto leaf_first =
      reduce_low_degree(star, CapacityMatrix::uniform(star, {2, 2}));
  REQUIRE(leaf_first.has_value());
  CHECK(leaf_first->v == 2);  // center has degree 4, not eligible

  const Graph icosi = load_graph_file("data/icosidodecahedron.txt");
  CHECK(!reduce_low_degree(icosi, CapacityMatrix::uniform(icosi, {2, 2}))
             .has_value());
}

TEST_CASE("planar solver handles peel-only instances") {
  const Graph c5 = load_graph_file("data/c5.txt");
  const Cover h = diagonal_cover(c5, ListAssignment::uniform(c5, 2));
  const CapacityMatrix fm = CapacityMatrix::uniform(c5, {2, 2});

  std::vector<std::string> trace;
  const SolveOutcome out = dp_color_planar(c5, h, fm, &trace);
  REQUIRE(out.status == SolveOutcome::Status::Found);
  CHECK(trace == std::vector<std::string>{"peel 1", "peel 2", "peel 3",
                                          "peel 4", "peel 5"});
  const std::map<Vertex, Color> expected = {{1, 2}, {2, 1}, {3, 1},
                                            {4, 1}, {5, 1}};
  CHECK(out.solution.picks == expected);
  CHECK(verify_certificate(representative_graph(h, out.solution),
                           pick_capacities(fm, out.solution),
                           out.certificate));

  const Graph chorded = load_graph_file("data/chorded_c6.txt");
  std::vector<std::string> trace2;
  dp_color_planar(chorded,
                  diagonal_cover(chorded, ListAssignment::uniform(chorded, 2)),
                  CapacityMatrix::uniform(chorded, {2, 2}), &trace2);
  CHECK(trace2 == std::vector<std::string>{"peel 1", "peel 2", "peel 3",
                                           "peel 4", "peel 5", "peel 6"});
}

TEST_CASE("planar solver reduces through the configuration") {
  const Graph icosi = load_graph_file("data/icosidodecahedron.txt");
  const CapacityMatrix fm22 = CapacityMatrix::uniform(icosi, {2, 2});
  const Cover diag2 = diagonal_cover(icosi, ListAssignment::uniform(icosi, 2));

  std::vector<std::string> trace;
  const SolveOutcome out = dp_color_planar(icosi, diag2, fm22, &trace);
  REQUIRE(out.status == SolveOutcome::Status::Found);
  CHECK(out.solution.picks.size() == 30);
  CHECK(testutil::certified_solution(diag2, fm22, out.solution));

  int config_lines = 0;
  for (const auto& line : trace)
    if (line.rfind("configF", 0) == 0) ++config_lines;
  CHECK(config_lines == 1);
  CHECK(std::count(trace.begin(), trace.end(), "configF 1 2 18 17 5 4") == 1);
  CHECK(std::count(trace.begin(), trace.end(), "case1") == 1);

  const CapacityMatrix fm211 = CapacityMatrix::uniform(icosi, {2, 1, 1});
  const Cover diag3 = diagonal_cover(icosi, ListAssignment::uniform(icosi, 3));
  std::vector<std::string> trace3;
  const SolveOutcome out3 = dp_color_planar(icosi, diag3, fm211, &trace3);
  REQUIRE(out3.status == SolveOutcome::Status::Found);
  CHECK(std::count(trace3.begin(), trace3.end(), "case2 4") == 1);
  CHECK(testutil::certified_solution(diag3, fm211, out3.solution));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Cover h = random_cover(icosi, 2, seed);
    const SolveOutcome r = dp_color_planar(icosi, h, fm22, nullptr);
    CHECK(r.status == SolveOutcome::Status::Found);
    CHECK(testutil::certified_solution(h, fm22, r.solution));
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Cover h = random_cover(icosi, 3, seed);
    const SolveOutcome r = dp_color_planar(icosi, h, fm211, nullptr);
    CHECK(r.status == SolveOutcome::Status::Found);
  }
}

TEST_CASE("planar solver validates its hypotheses") {
  const Graph k4 = testutil::graph_from_mask(4, ~std::uint64_t{0});
  CHECK_THROWS_AS(
      dp_color_planar(k4, diagonal_cover(k4, ListAssignment::uniform(k4, 2)),
                      CapacityMatrix::uniform(k4, {2, 2}), nullptr),
      HypothesisViolatedError);

  const Graph k5 = testutil::graph_from_mask(5, ~std::uint64_t{0});
  CHECK_THROWS_AS(
      dp_color_planar(k5, diagonal_cover(k5, ListAssignment::uniform(k5, 2)),
                      CapacityMatrix::uniform(k5, {2, 2}), nullptr),
      HypothesisViolatedError);

  const Graph c4 = load_graph_file("data/c4.txt");
  const Cover diag = diagonal_cover(c4, ListAssignment::uniform(c4, 2));
  CHECK_THROWS_AS(dp_color_planar(c4, diag,
                                  CapacityMatrix::uniform(c4, {1, 1}),
                                  nullptr),
                  HypothesisViolatedError);
  CHECK_THROWS_AS(dp_color_planar(c4, diag,
                                  CapacityMatrix::uniform(c4, {3, 1}),
                                  nullptr),
                  HypothesisViolatedError);
  CHECK_THROWS_AS(dp_color_planar(c4, diag, CapacityMatrix::uniform(c4, {4}),
                                  nullptr),
                  HypothesisViolatedError);

  CapacityMatrix holes = CapacityMatrix::uniform(c4, {2, 2});
  holes.rows.erase(2);
  CHECK_THROWS_AS(dp_color_planar(c4, diag, holes, nullptr),
                  HypothesisViolatedError);

  ListAssignment shifted;
  for (Vertex v : c4.vertices()) shifted.lists[v] = {1, 3};
  CHECK_THROWS_AS(dp_color_planar(c4, diagonal_cover(c4, shifted),
                                  CapacityMatrix::uniform(c4, {2, 2}),
                                  nullptr),
                  HypothesisViolatedError);

  Cover corrupt = diag;
  corrupt.set_matching(1, 2, {{1, 1}, {1, 2}});
  CHECK_THROWS_AS(dp_color_planar(c4, corrupt,
                                  CapacityMatrix::uniform(c4, {2, 2}),
                                  nullptr),
                  HypothesisViolatedError);
}

TEST_CASE("irreducible hypothesis-free graphs without the configuration") {
  const Graph g = circulant_13_1_5();
  REQUIRE(g.vertex_count() == 13);
  REQUIRE(g.edge_count() == 26);
  for (Vertex v : g.vertices()) CHECK(g.degree(v) == 4);
  CHECK(enumerate_cycles(g, 3).empty());  // triangle-free
  CHECK(!has_c4_adjacent_c3(g));
  CHECK(euler_planarity_sanity(g));
  CHECK(!find_config_f(g).has_value());

  CHECK_THROWS_AS(
      dp_color_planar(g, diagonal_cover(g, ListAssignment::uniform(g, 2)),
                      CapacityMatrix::uniform(g, {2, 2}), nullptr),
      NoConfigFError);
}
