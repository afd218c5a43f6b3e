#include "rdss/bounds.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "rdss/combinatorics.hpp"
#include "rdss/constructions.hpp"
#include "rdss/linear.hpp"
#include "rdss/resilience.hpp"

namespace rdss {

bool BoundsReport::partial() const {
  for (const auto& o : omitted)
    if (o.infeasible) return true;
  return false;
}

double seymour_bound(double k) {
  const double x = 4 * k;
  return x * std::log(x) * std::log(std::log2(x));
}

namespace {

std::vector<std::vector<Vertex>> edge_groups(const Matching& m) {
  std::vector<std::vector<Vertex>> out;
  for (auto [u, v] : m.edges) out.push_back({u, v});
  return out;
}

}  // namespace

BoundsReport bounds_report(const Graph& g, unsigned q, const Limits& limits, bool with_exact) {
  if (q < 2) throw InvalidArgument("alphabet size must be at least 2");
  BoundsReport r;
  r.q = q;
  const double n = static_cast<double>(g.vertex_count());
  auto attempt = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      r.omitted.push_back({name, e.what(), true});
    } catch (const InvalidArgument& e) {
      r.omitted.push_back({name, e.what(), false});
    }
  };

  if (!g.directed()) {
    attempt("matching", [&] {
      auto m = max_matching(g);
      r.entries.push_back({"matching", BoundKind::lower, static_cast<double>(m.size()),
                           "one replicated symbol per matched edge", {}, edge_groups(m), {}});
    });
    bool exact_cover = false;
    attempt("vertex_cover", [&] {
      auto vc = min_vertex_cover(g, SolveMode::exact, limits);
      r.entries.push_back({"vertex_cover", BoundKind::upper, static_cast<double>(vc.size()),
                           "minimum vertex cover", vc.members(), {}, {}});
      exact_cover = true;
    });
    if (!exact_cover) {
      auto vc = min_vertex_cover(g, SolveMode::approx, limits);
      r.entries.push_back({"vertex_cover_approx", BoundKind::upper, static_cast<double>(vc.size()),
                           "endpoints of a maximal matching", vc.members(), {}, {}});
    }
    attempt("clique_partition", [&] {
      SolveMode mode = g.vertex_count() <= limits.subset_cap ? SolveMode::exact : SolveMode::approx;
      auto parts = clique_partition(g, mode, limits);
      std::vector<std::vector<Vertex>> groups;
      for (const auto& p : parts) groups.push_back(p.members());
      r.entries.push_back({"clique_partition", BoundKind::lower, n - static_cast<double>(parts.size()),
                           mode == SolveMode::exact ? "minimum clique partition" : "greedy clique partition", {},
                           groups, {}});
    });
    attempt("cooperative_3path_cover", [&] {
      auto b = coop_upper_bound(g, limits);
      r.entries.push_back({"cooperative_3path_cover", BoundKind::info, static_cast<double>(b),
                           "upper bound on cooperative (t = 2) capacity: n minus a maximum dissociation set", {}, {},
                           {}});
    });
  } else {
    attempt("disjoint_cycles", [&] {
      auto cycles = max_vertex_disjoint_cycles(g, limits);
      r.entries.push_back({"disjoint_cycles", BoundKind::lower, static_cast<double>(cycles.size()),
                           "one replicated symbol per cycle", {}, {cycles.begin(), cycles.end()}, {}});
    });
    attempt("feedback_vertex_set", [&] {
      auto fvs = min_fvs(g, limits);
      r.entries.push_back({"feedback_vertex_set", BoundKind::upper, static_cast<double>(fvs.size()),
                           "minimum feedback vertex set", fvs.members(), {}, {}});
    });
    attempt("fractional_cycle_packing", [&] {
      auto k = fractional_cycle_packing_value(g, limits);
      double kv = k.convert_to<double>();
      std::ostringstream detail;
      detail << "K = " << k;
      if (kv > 0.5) detail << "; 4K ln(4K) ln(log2 4K) = " << seymour_bound(kv);
      r.entries.push_back({"fractional_cycle_packing", BoundKind::info, kv, detail.str(), {}, {}, {}});
    });
  }

  attempt("minrank", [&] {
    if (!is_prime(q)) throw InvalidArgument("minrank needs a prime alphabet");
    auto m = minrank(g, q, limits);
    r.entries.push_back({"minrank", BoundKind::lower, n - static_cast<double>(m.rank),
                         "null space of a fitting matrix of rank " + std::to_string(m.rank), {}, {}, m.witness});
  });

  std::optional<double> turan;
  attempt("turan", [&] {
    auto qs = q_set_size(g, q, limits);
    turan = qs.turan_bound;
    r.entries.push_back({"turan", BoundKind::lower, qs.turan_bound, "|Q| = " + std::to_string(qs.size), {}, {}, {}});
  });
  {
    auto db = degree_distribution_bound(g, q, turan);
    if (db.consistent)
      r.entries.push_back({"degree_distribution", BoundKind::lower, db.value, db.note, {}, {}, {}});
    else
      r.omitted.push_back({"degree_distribution", db.note + " (raw value " + std::to_string(db.value) + ")", false});
  }

  if (with_exact) {
    attempt("exact", [&] { r.exact = capacity_exact(g, q, limits).dimension; });
  }

  r.lower = 0;
  r.upper = n;
  for (const auto& e : r.entries) {
    if (e.kind == BoundKind::lower) r.lower = std::max(r.lower, e.value);
    if (e.kind == BoundKind::upper) r.upper = std::min(r.upper, e.value);
  }
  constexpr double eps = 1e-9;
  for (const auto& lo : r.entries)
    for (const auto& up : r.entries)
      if (lo.kind == BoundKind::lower && up.kind == BoundKind::upper && lo.value > up.value + eps)
        throw Error("inconsistent bounds: " + lo.name + " = " + std::to_string(lo.value) + " exceeds " + up.name +
                    " = " + std::to_string(up.value));
  if (r.exact && (*r.exact < r.lower - eps || *r.exact > r.upper + eps))
    throw Error("exact capacity " + std::to_string(*r.exact) + " lies outside [" + std::to_string(r.lower) + ", " +
                std::to_string(r.upper) + "]");
  return r;
}

}  // namespace rdss
