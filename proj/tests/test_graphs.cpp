#include <algorithm>
#include <utility>

#include "doctest.h"
#include "wordrep/graph.hpp"

using namespace wordrep;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidVertex);
  const Graph g(3, {{1, 0}, {1, 2}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.name(0) == "v1");
}

TEST_CASE("generator counts") {
  const Graph grid = generate({Family::grid, 3, 5});
  CHECK(grid.vertex_count() == 15);
  CHECK(grid.edge_count() == 22);
  CHECK(grid.name(grid_vertex_id(2, 4, 5)) == "x2_4");

  const Graph cyl = generate({Family::cyl_grid, 3, 5});
  CHECK(cyl.vertex_count() == 15);
  CHECK(cyl.edge_count() == 25);

  const Graph torus = generate({Family::toroidal_grid, 3, 3});
  CHECK(torus.vertex_count() == 9);
  CHECK(torus.edge_count() == 18);
  for (int v = 0; v < 9; ++v) CHECK(torus.neighbors(v).size() == 4);
}

TEST_CASE("edge count closed forms") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(generate({Family::grid, m, n}).edge_count() == m * (n - 1) + n * (m - 1));
      if (n >= 3) {
        CHECK(generate({Family::cyl_grid, m, n}).edge_count() == m * n + n * (m - 1));
      }
      if (m >= 3 && n >= 3) {
        CHECK(generate({Family::toroidal_grid, m, n}).edge_count() == 2 * m * n);
      }
    }
  }
}

TEST_CASE("family aliases") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(generate({Family::path, 1, n}) == generate({Family::grid, 1, n}));
    CHECK(generate({Family::ladder, 1, n}) == generate({Family::grid, 2, n}));
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(generate({Family::cycle, 1, n}) == generate({Family::cyl_grid, 1, n}));
    CHECK(generate({Family::prism, 1, n}) == generate({Family::cyl_grid, 2, n}));
  }
}

TEST_CASE("torus adds exactly the column wrap edges") {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 3; n <= 6; ++n) {
      auto edges = generate({Family::cyl_grid, m, n}).edges();
      for (int j = 1; j <= n; ++j) {
        auto e = std::make_pair(grid_vertex_id(1, j, n), grid_vertex_id(m, j, n));
        if (e.first > e.second) std::swap(e.first, e.second);
        edges.push_back(e);
      }
      std::sort(edges.begin(), edges.end());
      CHECK(generate({Family::toroidal_grid, m, n}).edges() == edges);
    }
  }
}

TEST_CASE("family invariants") {
  CHECK_THROWS_AS(generate({Family::cyl_grid, 3, 2}), InvalidFamilyParams);
  CHECK_THROWS_AS(generate({Family::cycle, 1, 2}), InvalidFamilyParams);
  CHECK_THROWS_AS(generate({Family::prism, 1, 2}), InvalidFamilyParams);
  CHECK_THROWS_AS(generate({Family::toroidal_grid, 2, 4}), InvalidFamilyParams);
  CHECK_THROWS_AS(generate({Family::grid, 0, 4}), InvalidFamilyParams);
  CHECK_THROWS_AS(generate({Family::path, 1, 0}), InvalidFamilyParams);
}

TEST_CASE("is_complete") {
  CHECK(is_complete(generate({Family::complete, 1, 4})));
  CHECK_FALSE(is_complete(generate({Family::grid, 2, 2})));
  CHECK(is_complete(generate({Family::grid, 1, 1})));
  CHECK(is_complete(generate({Family::grid, 1, 2})));
}

TEST_CASE("parse_graph basics") {
  const Graph g = parse_graph("p edge 2 1\ne 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  const Graph named = parse_graph("c a comment\np edge 2 1\nn 1 left\nn 2 right\ne 1 2\n");
  CHECK(named.name(0) == "left");
  CHECK(named.name(1) == "right");
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n"), ParseError);  // count mismatch
  CHECK_THROWS_AS(parse_graph("p edge 2 1\nq 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  try {
    parse_graph("p edge 2 1\ne 1 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("write_graph emits the documented format") {
  const std::string text = write_graph(generate({Family::grid, 3, 5}));
  CHECK(text.substr(0, 13) == "p edge 15 22\n");
  CHECK(text.find("n 1 x1_1\n") != std::string::npos);

  // default names are omitted
  CHECK(write_graph(Graph(2, {{0, 1}})) == "p edge 2 1\ne 1 2\n");
}

TEST_CASE("parse after write is the identity") {
  std::vector<Graph> graphs = {
      Graph(0),
      Graph(3),
      Graph(4, {{0, 1}, {2, 3}}, {"a", "b", "c", "d"}),
      generate({Family::grid, 3, 5}),
      generate({Family::cyl_grid, 4, 3}),
      generate({Family::toroidal_grid, 3, 4}),
      generate({Family::complete, 1, 5}),
      generate({Family::path, 1, 6}),
  };
  for (const Graph& g : graphs) {
    CHECK(parse_graph(write_graph(g)) == g);
  }
}

TEST_CASE("induced_subgraph") {
  const Graph grid = generate({Family::grid, 3, 3});
  const Graph row = induced_subgraph(grid, {0, 1, 2});
  CHECK(row.vertex_count() == 3);
  CHECK(row.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  // rows 1-2 of the 3x5 cylinder form the prism over 5 columns
  const Graph cyl = generate({Family::cyl_grid, 3, 5});
  std::vector<int> rows12(10);
  for (int v = 0; v < 10; ++v) rows12[static_cast<std::size_t>(v)] = v;
  CHECK(induced_subgraph(cyl, rows12) == generate({Family::prism, 2, 5}));

  CHECK(induced_subgraph(grid, {}).vertex_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(grid, {9}), InvalidVertex);
  CHECK_THROWS_AS(induced_subgraph(grid, {1, 1}), InvalidVertex);
}
