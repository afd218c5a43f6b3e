#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rdss/constructions.hpp"
#include "rdss/lp.hpp"

using namespace rdss;

namespace {

Graph shared_triangles() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}, true); }

Graph dag() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}, true); }

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("matching code examples") {
    auto c5 = matching_code(graphs::cycle(5), 2);
    CHECK(c5.size() == 4);
    CHECK(verify_rdss(graphs::cycle(5), c5).ok);
    auto edge = matching_code(graphs::path(2), 3);
    CHECK(edge.words() == std::vector<Word>{{0, 0}, {1, 1}, {2, 2}});
    auto none = matching_code(graphs::edgeless(3), 2);
    CHECK(none.words() == std::vector<Word>{{0, 0, 0}});
    CHECK_THROWS_AS(matching_code(graphs::cycle(3, true), 2), InvalidArgument);
  }

  TEST_CASE("cycle replication examples") {
    auto tri = cycle_replication_code(graphs::cycle(3, true), 2);
    CHECK(tri.words() == std::vector<Word>{{0, 0, 0}, {1, 1, 1}});
    auto two = graphs::cycle(3, true).disjoint_union(graphs::cycle(3, true));
    CHECK(cycle_replication_code(two, 2).size() == 4);
    CHECK(cycle_replication_code(dag(), 2).size() == 1);
  }

  TEST_CASE("clique partition code examples") {
    auto k5 = clique_partition_code(graphs::complete(5), 2);
    CHECK(k5.dimension() == doctest::Approx(4));
    CHECK(verify_rdss(graphs::complete(5), k5).ok);
    auto c5 = clique_partition_code(graphs::cycle(5), 2);
    CHECK(c5.dimension() == doctest::Approx(2));
    CHECK(clique_partition_code(graphs::edgeless(3), 2).size() == 1);
    auto k3 = clique_partition_code(graphs::complete(3), 3);
    for (const auto& w : k3.words()) CHECK((w[0] + w[1] + w[2]) % 3 == 0);
  }

  TEST_CASE("constructed codes verify and respect the capacity") {
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& g : oracle::connected_graphs(n)) {
        auto cap = capacity_exact(g, 2).dimension;
        auto m = matching_code(g, 2);
        CHECK(verify_rdss(g, m).ok);
        CHECK(m.dimension() >= cap / 2 - 1e-9);
        if (is_bipartite(g).bipartite) CHECK(m.dimension() == doctest::Approx(cap));
        auto cl = clique_partition_code(g, 2);
        CHECK(verify_rdss(g, cl).ok);
        CHECK(cl.dimension() <= cap + 1e-9);
        CHECK(verify_rdss(g, clique_partition_code(g, 3)).ok);
      }
    std::mt19937_64 rng(53);
    for (int t = 0; t < 80; ++t) {
      auto g = oracle::random_digraph(2 + rng() % 5, 0.4, rng);
      auto c = cycle_replication_code(g, 2);
      CHECK(verify_rdss(g, c).ok);
      CHECK(c.dimension() == doctest::Approx(static_cast<double>(max_vertex_disjoint_cycles(g).size())));
    }
  }

  TEST_CASE("exact simplex") {
    // maximize 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    LinearProgram lp;
    lp.c = {3, 2};
    lp.add({1, 1}, Relation::le, 4);
    lp.add({1, 3}, Relation::le, 6);
    lp.add({1, 0}, Relation::le, 3);
    auto s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.value == 11);
    CHECK(s.x == std::vector<Rational>{3, 1});
    // equality and >= rows need the first phase
    LinearProgram eq;
    eq.c = {1, 1};
    eq.add({1, 2}, Relation::eq, 3);
    eq.add({1, 0}, Relation::ge, 1);
    eq.add({2, 1}, Relation::le, 5);
    auto e = solve_lp(eq);
    REQUIRE(e.status == LpStatus::optimal);
    CHECK(e.value == Rational(8, 3));
    CHECK(e.x == std::vector<Rational>{Rational(7, 3), Rational(1, 3)});
    LinearProgram infeasible;
    infeasible.c = {1};
    infeasible.add({1}, Relation::le, 1);
    infeasible.add({1}, Relation::ge, 2);
    CHECK(solve_lp(infeasible).status == LpStatus::infeasible);
    LinearProgram unbounded;
    unbounded.c = {1, 0};
    unbounded.add({0, 1}, Relation::le, 1);
    CHECK(solve_lp(unbounded).status == LpStatus::unbounded);
    LinearProgram negative;
    negative.c = {-1};
    negative.add({-1}, Relation::le, -2);
    auto ng = solve_lp(negative);
    REQUIRE(ng.status == LpStatus::optimal);
    CHECK(ng.value == -2);
  }

  TEST_CASE("fractional packing examples") {
    auto tri = fractional_cycle_packing(graphs::cycle(3, true));
    CHECK(tri.value == 1);
    CHECK(tri.denominator == 1);
    CHECK(tri.weights == std::vector<Rational>{1});
    auto shared = fractional_cycle_packing(shared_triangles());
    CHECK(shared.value == 1);
    CHECK(shared.denominator == 2);
    CHECK(shared.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    auto none = fractional_cycle_packing(dag());
    CHECK(none.value == 0);
    CHECK(none.cycles.empty());
    auto k3 = fractional_cycle_packing(graphs::complete(3, true));
    CHECK(k3.value == Rational(3, 2));
  }

  TEST_CASE("packing invariants on random digraphs") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 60; ++t) {
      auto g = oracle::random_digraph(2 + rng() % 5, 0.35, rng);
      auto p = fractional_cycle_packing(g);
      for (const auto& load : vertex_loads(g.vertex_count(), p)) CHECK(load <= 1);
      BigInt total = 0;
      for (const auto& m : p.multiplicities) total += m;
      CHECK(Rational(total) == p.value * p.denominator);
      CHECK(p.value == fractional_cycle_packing_value(g));
      CHECK(p.value >= static_cast<long>(max_vertex_disjoint_cycles(g).size()));
      CHECK(p.value <= static_cast<long>(min_fvs(g).size()));
      double k = p.value.convert_to<double>();
      if (k > 0.5) CHECK(static_cast<double>(min_fvs(g).size()) <= 4 * k * std::log(4 * k) * std::log(std::log2(4 * k)) + 1e-9);
      VectorCode vc(g, p, 2);
      CHECK(vc.max_load() <= p.denominator);
      CHECK(check_vector_repair(vc, g.vertex_count(), 50, 1));
    }
  }

  TEST_CASE("vector code examples") {
    auto g = shared_triangles();
    VectorCode vc(g, fractional_cycle_packing(g), 2);
    CHECK(vc.message_length() == 2);
    CHECK(vc.stored(0).size() == 2);
    for (Vertex v = 1; v < 5; ++v) CHECK(vc.stored(v).size() == 1);
    CHECK(check_vector_repair(vc, 5, 1000, 7));
    auto tri = graphs::cycle(3, true);
    VectorCode single(tri, fractional_cycle_packing(tri), 3);
    CHECK(single.message_length() == 1);
    CHECK(single.encode({2}) == std::vector<std::vector<Symbol>>{{2}, {2}, {2}});
    VectorCode empty(dag(), fractional_cycle_packing(dag()), 2);
    CHECK(empty.message_length() == 0);
    CHECK(serialize_vector_code(vc, 5) == "v rdss 5 2 2 1 1\ncyc 1 0 1 2\ncyc 1 0 3 4\n");
  }

  TEST_CASE("overloaded packing is rejected") {
    auto g = shared_triangles();
    auto p = fractional_cycle_packing(g);
    p.weights = {1, 1};
    p.multiplicities = {2, 2};
    CHECK_THROWS_AS(VectorCode(g, p, 2), InvalidArgument);
  }

  TEST_CASE("vector code files read back") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 40; ++t) {
      auto g = oracle::random_digraph(2 + rng() % 5, 0.4, rng);
      VectorCode vc(g, fractional_cycle_packing(g), 2);
      auto text = serialize_vector_code(vc, g.vertex_count());
      auto back = parse_vector_code(text);
      CHECK(back.n == g.vertex_count());
      CHECK(back.packing.value == vc.packing().value);
      CHECK(back.packing.weights == vc.packing().weights);
      VectorCode again(g, back.packing, back.q);
      CHECK(serialize_vector_code(again, g.vertex_count()) == text);
    }
    CHECK_THROWS_AS(parse_vector_code("v rdss 3 2 1 2 1\ncyc 1 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_vector_code("v rdss 3 2 1 1 1\ncyc 1 0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_vector_code("cyc 1 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_vector_code("v rdss 3 2 0 1 1\n"), ParseError);
  }
}
