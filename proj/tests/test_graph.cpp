#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rdss/graph.hpp"

using namespace rdss;

namespace {

Graph pentagon() { return graphs::cycle(5); }

// Fig. 1 style graph: vertex 2 sees 0, 1 and 3.
Graph four_vertex_example() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, false); }

std::vector<Vertex> members_of(const VertexSet& s) { return s.members(); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("parse single edge") {
    auto g = parse_graph("p rdss 2 1 u\ne 0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(!g.directed());
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    CHECK(g.has_edge(1, 0));
  }

  TEST_CASE("parse pentagon with comments") {
    auto g = parse_graph("# pentagon\np rdss 5 5 u\ne 0 1\ne 1 2\ne 2 3\n# middle comment\ne 3 4\ne 4 0\n");
    CHECK(g == pentagon());
    CHECK(g.has_edge(0, 4));
  }

  TEST_CASE("parse directed triangle") {
    auto g = parse_graph("p rdss 3 3 d\ne 0 1\ne 1 2\ne 2 0");
    CHECK(g.directed());
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(1, 0));
    CHECK(g == graphs::cycle(3, true));
  }

  TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
      try {
        parse_graph(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{9999};
    };
    CHECK(line_of("p rdss x 1 u\ne 0 1") == 1);
    CHECK(line_of("p rdss 2 1 q\ne 0 1") == 1);
    CHECK(line_of("p rdss 2 1 u\ne 0 2") == 2);
    CHECK(line_of("p rdss 2 1 u\ne 1 1") == 2);
    CHECK(line_of("p rdss 3 2 u\ne 0 1\ne 1 0") == 3);
    CHECK(line_of("p rdss 3 2 d\ne 0 1\n# c\ne 0 1") == 4);
    CHECK(line_of("p rdss 3 2 u\ne 0 1") != 9999);
    CHECK(line_of("p rdss 3 1 u\ne 0 1\ne 1 2") == 3);
    CHECK(line_of("e 0 1") == 1);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
  }

  TEST_CASE("directed duplicates are distinct orientations") {
    auto g = parse_graph("p rdss 2 2 d\ne 0 1\ne 1 0");
    CHECK(g.edge_count() == 2);
  }

  TEST_CASE("neighborhood examples") {
    CHECK(members_of(neighborhood(four_vertex_example(), 2)) == std::vector<Vertex>{0, 1, 3});
    CHECK(neighborhood(graphs::edgeless(3), 1).empty());
    CHECK(members_of(neighborhood(graphs::cycle(3, true), 0)) == std::vector<Vertex>{1});
    CHECK_THROWS(neighborhood(pentagon(), 7));
  }

  TEST_CASE("neighborhood of a set") {
    auto g = pentagon();
    CHECK(members_of(neighborhood_of_set(g, VertexSet(5, {0, 2}))) == std::vector<Vertex>{1, 3, 4});
    CHECK(neighborhood_of_set(g, VertexSet(5)).empty());
    CHECK(neighborhood_of_set(g, VertexSet(5, {0, 1, 2, 3, 4})).empty());
    CHECK(neighborhood_mask(g, 0b101) == 0b11010);
  }

  TEST_CASE("round trip, symmetry and singleton neighborhoods on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + rng() % 9;
      Graph g = t % 2 ? oracle::random_graph(n, 0.4, rng) : oracle::random_digraph(n, 0.3, rng);
      CHECK(parse_graph(serialize_graph(g)) == g);
      for (Vertex v = 0; v < n; ++v) {
        auto nb = neighborhood(g, v);
        CHECK(!nb.contains(v));
        CHECK(neighborhood_of_set(g, VertexSet(n, {v})) == nb);
        if (!g.directed())
          for (Vertex u : nb.members()) CHECK(neighborhood(g, u).contains(v));
      }
    }
  }

  TEST_CASE("isolated vertices are reported") {
    Graph g(3, {{0, 1}}, false);
    CHECK(g.isolated_vertices() == std::vector<Vertex>{2});
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}, false), InvalidArgument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}, false), InvalidArgument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}, false), InvalidArgument);
    CHECK_NOTHROW(Graph(2, {{0, 1}, {1, 0}}, true));
  }

  TEST_CASE("disjoint union shifts the second graph") {
    auto g = graphs::path(2).disjoint_union(graphs::cycle(3));
    CHECK(g.vertex_count() == 5);
    CHECK(g.has_edge(2, 4));
    CHECK(!g.has_edge(1, 2));
  }

  TEST_CASE("vertex set basics") {
    VertexSet s(70, {1, 65});
    CHECK(s.size() == 2);
    CHECK(s.contains(65));
    s.erase(1);
    CHECK(s.members() == std::vector<Vertex>{65});
  }
}
