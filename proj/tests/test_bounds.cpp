#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rdss/bounds.hpp"

using namespace rdss;

namespace {

const BoundEntry* find(const BoundsReport& r, const std::string& name) {
  for (const auto& e : r.entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("bounds report examples") {
    auto p = bounds_report(graphs::cycle(5), 2);
    CHECK(p.lower == 2);
    CHECK(p.upper == 3);
    CHECK(find(p, "matching")->groups.size() == 2);
    CHECK(find(p, "vertex_cover")->vertices.size() == 3);
    CHECK(find(p, "minrank")->value == 2);
    CHECK(find(p, "cooperative_3path_cover")->kind == BoundKind::info);
    CHECK(*p.exact == doctest::Approx(std::log2(5.0)));
    CHECK(!p.partial());

    auto c4 = bounds_report(graphs::cycle(4), 2);
    CHECK(c4.lower == 2);
    CHECK(c4.upper == 2);
    auto tri = bounds_report(graphs::cycle(3, true), 2);
    CHECK(tri.lower == 1);
    CHECK(tri.upper == 1);
    CHECK(find(tri, "fractional_cycle_packing")->kind == BoundKind::info);

    auto k5 = bounds_report(graphs::complete(5), 2);
    CHECK(find(k5, "degree_distribution") == nullptr);
    CHECK(k5.omitted.back().name == "degree_distribution");
    CHECK(!k5.omitted.back().infeasible);

    Limits quick;
    quick.search_cap = 1 << 14;
    auto q4 = bounds_report(graphs::cycle(5), 4, quick);
    CHECK(find(q4, "minrank") == nullptr);
    CHECK(q4.omitted.front().name == "minrank");
    CHECK(!q4.omitted.front().infeasible);
    CHECK(q4.partial() == !q4.exact);
    CHECK_THROWS_AS(capacity_exact(graphs::cycle(5), 4, quick), CapExceeded);
  }

  TEST_CASE("caps make a partial report") {
    Limits tight;
    tight.subset_cap = 2;
    tight.state_cap = 8;
    auto r = bounds_report(graphs::cycle(5), 2, tight);
    CHECK(r.partial());
    CHECK(find(r, "vertex_cover_approx") != nullptr);
    CHECK(!r.exact);
    CHECK(r.lower <= r.upper);
  }

  TEST_CASE("interval contains the exact capacity") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 80; ++t) {
      unsigned q = 2 + t % 2;
      std::size_t n = 1 + rng() % (q == 2 ? 6 : 4);
      auto g = t % 2 ? oracle::random_graph(n, 0.5, rng) : oracle::random_digraph(n, 0.4, rng);
      auto r = bounds_report(g, q);
      REQUIRE(r.exact);
      CHECK(r.lower <= *r.exact + 1e-9);
      CHECK(*r.exact <= r.upper + 1e-9);
      for (const auto& e : r.entries)
        if (e.kind == BoundKind::lower) CHECK(e.value <= *r.exact + 1e-9);
        else if (e.kind == BoundKind::upper) CHECK(e.value >= *r.exact - 1e-9);
    }
  }
}
