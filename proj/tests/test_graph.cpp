#include <doctest.h>

#include "dpcover/graph.hpp"
#include "dpcover/io.hpp"
#include "helpers.hpp"

using namespace dpcover;

namespace {

Graph k(int n) { return testutil::graph_from_mask(n, ~std::uint64_t{0}); }

}  // namespace

TEST_CASE("graph construction and views") {
  Graph g = Graph::from_edges({{1, 2}, {2, 3}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(g.edges() ==
        std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}});
  CHECK(g.degree(2) == 2);
  CHECK(g.neighbors(2) == std::set<Vertex>{1, 3});
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(1, 3));

  g.add_edge(2, 1);  // parallel edges collapse
  CHECK(g.edge_count() == 2);
  g.add_vertex(9);
  CHECK(g.vertex_count() == 4);
  CHECK(g.degree(9) == 0);

  CHECK_THROWS_AS(g.add_edge(3, 3), SelfLoopError);
  CHECK_THROWS_AS(g.neighbors(42), UnknownVertexError);
  CHECK_THROWS_AS(g.degree(42), UnknownVertexError);
  try {
    g.neighbors(42);
  } catch (const UnknownVertexError& e) {
    CHECK(e.vertex == 42);
  }

  CHECK(Graph{}.empty());
  CHECK(!g.empty());
}

TEST_CASE("induced and erased subgraphs") {
  const Graph k4 = k(4);
  const Graph tri = k4.induced({1, 2, 3});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri == k4.erased({4}));
  CHECK(k4.erased({1, 2, 3, 4}).empty());

  const Graph single = k4.induced({2});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("cycle enumeration is canonical") {
  const Graph c5 = load_graph_file("data/c5.txt");
  const CycleList cycles = enumerate_cycles(c5, 6);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0] == Cycle{1, 2, 3, 4, 5});

  const CycleList k4_cycles = enumerate_cycles(k(4), 4);
  REQUIRE(k4_cycles.size() == 7);
  const CycleList expected = {{1, 2, 3},    {1, 2, 4},    {1, 3, 4},
                              {2, 3, 4},    {1, 2, 3, 4}, {1, 2, 4, 3},
                              {1, 3, 2, 4}};
  CHECK(k4_cycles == expected);
  CHECK(enumerate_cycles(k(4), 3).size() == 4);

  for (const Cycle& c : k4_cycles) {
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
  }

  const Graph chorded = load_graph_file("data/chorded_c6.txt");
  std::vector<std::size_t> lengths;
  for (const Cycle& c : enumerate_cycles(chorded, 6))
    lengths.push_back(c.size());
  CHECK(lengths == std::vector<std::size_t>{3, 5, 6});

  CHECK_THROWS_AS(enumerate_cycles(c5, 2), std::invalid_argument);
}

TEST_CASE("cycle counts match the definition on all small graphs") {
  for (int n = 3; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      const Graph g = testutil::graph_from_mask(n, mask);
      CHECK(enumerate_cycles(g, n).size() == testutil::naive_cycle_count(g, n));
      if (n == 5)
        CHECK(enumerate_cycles(g, 4).size() ==
              testutil::naive_cycle_count(g, 4));
    }
  }
}

TEST_CASE("4-cycle adjacent to 3-cycle detection") {
  CHECK(!has_c4_adjacent_c3(load_graph_file("data/c4.txt")));
  CHECK(!has_c4_adjacent_c3(load_graph_file("data/c5.txt")));
  CHECK(!has_c4_adjacent_c3(load_graph_file("data/tree5.txt")));
  CHECK(!has_c4_adjacent_c3(load_graph_file("data/chorded_c6.txt")));

  // two triangles glued at one vertex: no 4-cycle at all
  const Graph bowtie =
      Graph::from_edges({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!has_c4_adjacent_c3(bowtie));

  const Graph house =
      Graph::from_edges({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}});
  REQUIRE(has_c4_adjacent_c3(house));
  const auto w = find_c4_adjacent_c3(house);
  REQUIRE(w.has_value());
  CHECK(w->four_cycle.size() == 4);
  CHECK(w->triangle.size() == 3);
  bool share = false;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex a = w->four_cycle[i];
    const Vertex b = w->four_cycle[(i + 1) % 4];
    for (std::size_t j = 0; j < 3; ++j) {
      const Vertex c = w->triangle[j];
      const Vertex d = w->triangle[(j + 1) % 3];
      if (std::minmax(a, b) == std::minmax(c, d)) share = true;
    }
  }
  CHECK(share);

  CHECK(has_c4_adjacent_c3(k(4)));
  CHECK(has_c4_adjacent_c3(load_graph_file("data/octahedron.txt")));

  const Graph icosi = load_graph_file("data/icosidodecahedron.txt");
  CHECK(icosi.vertex_count() == 30);
  CHECK(icosi.edge_count() == 60);
  CHECK(enumerate_cycles(icosi, 4).size() == 20);  // triangles only, no C4
  CHECK(!has_c4_adjacent_c3(icosi));
}

TEST_CASE("euler planarity sanity") {
  CHECK(euler_planarity_sanity(k(4)));
  CHECK(!euler_planarity_sanity(k(5)));
  CHECK(euler_planarity_sanity(load_graph_file("data/c4.txt")));
  CHECK(euler_planarity_sanity(load_graph_file("data/icosidodecahedron.txt")));
  CHECK(euler_planarity_sanity(Graph::from_edges({{1, 2}})));  // vacuous
}
