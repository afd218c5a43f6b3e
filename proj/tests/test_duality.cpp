#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rdss/duality.hpp"
#include "rdss/linear.hpp"

using namespace rdss;

namespace {

Code pentagon_code() {
  std::vector<Word> w;
  for (const char* s : {"00000", "01100", "00011", "11011", "11101"}) w.push_back(parse_word(s, 2, 5));
  return Code(2, 5, w);
}

Code whole_space(unsigned q, std::size_t n) {
  Space s(q, n);
  std::vector<Word> w;
  for (std::uint64_t x = 0; x < s.size(); ++x) w.push_back(s.word(x));
  return Code(q, n, w);
}

PointSet random_points(const Space& s, std::mt19937_64& rng) {
  PointSet p;
  for (std::uint64_t x = 0; x < s.size(); ++x)
    if (rng() % 3 == 0) p.push_back(x);
  return p;
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("uncovered fraction examples") {
    Space s(2, 5);
    PointSet all(32);
    for (std::uint64_t x = 0; x < 32; ++x) all[x] = x;
    CHECK(q_uncovered(s, all) == 0);
    CHECK(q_uncovered(s, {}) == 1);
    CHECK(q_uncovered(s, points(s, pentagon_code())) == Rational(27, 32));
  }

  TEST_CASE("greedy covering examples") {
    auto full = greedy_covering(whole_space(3, 2));
    CHECK(full.size() == 0);
    CHECK(full.span == std::vector<std::uint64_t>{0});
    for (std::size_t n = 1; n <= 5; ++n) {
      Code zero(2, n, {Word(n, 0)});
      auto f = greedy_covering(zero);
      CHECK(f.size() == n);
      CHECK(f.distinct == (std::size_t{1} << n));
    }
    auto c = pentagon_code();
    auto f = greedy_covering(c);
    CHECK(covering_generator_bound(2, 5, 5) == 5);
    CHECK(static_cast<long>(f.size()) <= 5);
    Space s(2, 5);
    CHECK(covers(s, points(s, c), f));
    CHECK(serialize_covering(f).rfind("g " + std::to_string(f.size()) + "\n", 0) == 0);
  }

  TEST_CASE("greedy trajectory squares the uncovered fraction") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 60; ++t) {
      unsigned q = 2 + t % 2;
      std::size_t n = 2 + rng() % (q == 2 ? 4 : 3);
      Space s(q, n);
      PointSet p = random_points(s, rng);
      if (p.empty()) p.push_back(0);
      std::vector<Word> w;
      for (auto x : p) w.push_back(s.word(x));
      Code c(q, n, w);
      auto f = greedy_covering(c);
      CHECK(covers(s, p, f));
      CHECK(static_cast<long>(f.size()) <= covering_generator_bound(q, n, c.size()));
      Rational q0 = f.uncovered.front(), power = q0;
      for (std::size_t i = 1; i < f.uncovered.size(); ++i) {
        power *= power;
        CHECK(f.uncovered[i] <= power);
        CHECK(f.uncovered[i] <= f.uncovered[i - 1] * f.uncovered[i - 1]);
      }
      CHECK(f.uncovered.back() == 0);
    }
  }

  TEST_CASE("parallel covering matches the sequential one") {
    Limits four;
    four.threads = 4;
    auto c = pentagon_code();
    auto a = greedy_covering(c), b = greedy_covering(c, four);
    CHECK(a.generators == b.generators);
  }

  TEST_CASE("covering index code on the pentagon") {
    auto g = graphs::cycle(5);
    auto c = pentagon_code();
    auto idx = index_from_rdss(g, c, greedy_covering(c));
    CHECK(check_index_code(g, idx));
    CHECK(idx.length <= index_length_bound(2, 5, 5) + 1e-9);
    CHECK(index_length_bound(2, 5, 5) == doctest::Approx(4.0617).epsilon(1e-3));
    CHECK(idx.transmitted <= 5);
    CHECK(within_index_bound(2, 5, 5, idx.label_count));
  }

  TEST_CASE("whole space needs no broadcast") {
    auto g = graphs::complete(3);
    auto c = whole_space(2, 3);
    CHECK_THROWS_AS(index_from_rdss(g, c, greedy_covering(c)), InvalidArgument);
    Graph none(2, {}, false);
    Code trivial(2, 2, {Word{0, 0}});
    auto idx = index_from_rdss(none, trivial, greedy_covering(trivial));
    CHECK(check_index_code(none, idx));
    CHECK(idx.length == doctest::Approx(2));
  }

  TEST_CASE("linear code through both paths") {
    auto g = graphs::cycle(5);
    auto c = linear_rdss_from_fit(g, minrank(g, 2).witness);
    auto syndrome = index_from_linear(syndrome_index_code(g, c), 5);
    CHECK(check_index_code(g, syndrome));
    CHECK(syndrome.length == 3);
    auto covering = index_from_rdss(g, c, greedy_covering(c));
    CHECK(check_index_code(g, covering));
    CHECK(covering.length <= index_length_bound(2, 5, c.size()) + 1e-9);
  }

  TEST_CASE("fibers of index codes") {
    auto g = graphs::cycle(5);
    auto c = linear_rdss_from_fit(g, minrank(g, 2).witness);
    auto fiber = rdss_from_index(g, index_from_linear(syndrome_index_code(g, c), 5));
    CHECK(fiber.size() >= 4);
    CHECK(verify_rdss(g, fiber).ok);
    Code zero(2, 4, {Word(4, 0)});
    auto identity = index_from_linear(syndrome_index_code(graphs::cycle(4), zero), 4);
    CHECK(rdss_from_index(graphs::cycle(4), identity).size() == 1);
    auto p = pentagon_code();
    auto back = rdss_from_index(g, index_from_rdss(g, p, greedy_covering(p)));
    CHECK(verify_rdss(g, back).ok);
    CHECK(back.dimension() >= p.dimension() - std::log2(std::min(5 * std::log(2.0), 1 + std::log(5.0))) - 1e-9);
  }

  TEST_CASE("identity oracles") {
    Space s(2, 3);
    CHECK(bassalygo_elias_check(s, {0}, {0}));
    PointSet all(8);
    for (std::uint64_t x = 0; x < 8; ++x) all[x] = x;
    CHECK(bassalygo_elias_check(s, all, {1, 5}));
    CHECK(q_recursion_check(s, all));
    CHECK(q_recursion_check(s, {}));
    Space five(2, 5);
    CHECK(q_recursion_check(five, points(five, pentagon_code())));
    // the average itself, spelled out
    auto f = points(five, pentagon_code());
    Rational total = 0;
    for (std::uint64_t x = 0; x < 32; ++x) {
      std::set<std::uint64_t> u(f.begin(), f.end());
      for (auto y : f) u.insert(five.add(y, x));
      total += Rational(1) - Rational(static_cast<long>(u.size()), 32);
    }
    CHECK(total / 32 == Rational(729, 1024));
    std::mt19937_64 rng(67);
    for (int t = 0; t < 100; ++t) {
      Space sp = t % 2 ? Space(2, 4) : Space(3, 3);
      auto a = random_points(sp, rng), b = random_points(sp, rng);
      CHECK(bassalygo_elias_check(sp, a, b));
      CHECK(q_recursion_check(sp, a));
    }
  }

  TEST_CASE("duality sandwich on random instances") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
      unsigned q = 2 + t % 2;
      std::size_t n = 2 + rng() % (q == 2 ? 4 : 3);
      auto g = t % 3 ? oracle::random_graph(n, 0.5, rng) : oracle::random_digraph(n, 0.5, rng);
      auto cap = capacity_exact(g, q);
      auto idx = index_from_rdss(g, cap.code, greedy_covering(cap.code));
      CHECK(check_index_code(g, idx));
      CHECK(static_cast<double>(n) - cap.dimension <= idx.length + 1e-9);
      CHECK(within_index_bound(q, n, cap.code.size(), idx.label_count));
    }
  }

  TEST_CASE("covering files read back") {
    auto c = pentagon_code();
    auto f = greedy_covering(c);
    CHECK(parse_covering(serialize_covering(f), 2, 5) == f.generators);
    CHECK(parse_covering("g 0\n", 2, 5).empty());
    CHECK_THROWS_AS(parse_covering("g 2\n00001\n", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_covering("g 1\n0001\n", 2, 5), ParseError);
  }

  TEST_CASE("one binary vertex sits below the index bound") {
    // n ln q < 1: the guaranteed length drops below n - dim(C), which no index code meets
    CHECK(index_length_bound(2, 1, 1) < 1);
    CHECK(!within_index_bound(2, 1, 1, 2));
    CHECK(within_index_bound(3, 1, 1, 3));
    CHECK(within_index_bound(2, 2, 1, 4));
  }
}
