#include "rdss/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "rdss/clique.hpp"
#include "rdss/constructions.hpp"

namespace rdss {

namespace {

Word restrict_to(const Word& w, const std::vector<Vertex>& where) {
  Word out;
  for (Vertex v : where) out.push_back(w[v]);
  return out;
}

}  // namespace

CoopCheck verify_cooperative(const Graph& g, const Code& c, unsigned t) {
  if (g.directed()) throw InvalidArgument("cooperative repair is defined here for undirected graphs only");
  if (t < 1 || t > 2) throw InvalidArgument("cooperative repair supports t = 1 or 2");
  if (c.length() != g.vertex_count()) throw InvalidArgument("code length does not match the graph");
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.vertex_count(); ++v) groups.push_back({v});
  if (t == 2)
    for (auto [u, v] : g.edges()) groups.push_back({u, v});
  for (const auto& u : groups) {
    VertexSet us(g.vertex_count());
    for (Vertex v : u) us.insert(v);
    auto outside = neighborhood_of_set(g, us).members();
    std::map<Word, Word> seen;
    bool conflict = false;
    for (const auto& w : c.words()) {
      auto [it, fresh] = seen.emplace(restrict_to(w, outside), restrict_to(w, u));
      if (!fresh && it->second != restrict_to(w, u)) {
        conflict = true;
        break;
      }
    }
    if (!conflict) continue;
    const auto& words = c.words();
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        if (restrict_to(words[i], outside) == restrict_to(words[j], outside) &&
            restrict_to(words[i], u) != restrict_to(words[j], u))
          return {false, u, words[i], words[j]};
  }
  return {};
}

std::size_t coop_upper_bound(const Graph& g, const Limits& limits) {
  return g.vertex_count() - max_dissociation_set(g, limits).size();
}

CoopConstruction coop_construct(const Graph& g, unsigned q, const Limits& limits) {
  auto packing = vertex_disjoint_3paths(g, limits);
  std::vector<std::vector<Vertex>> groups;
  for (const auto& p : packing.paths) groups.push_back({p.begin(), p.end()});
  return {replication_code(g.vertex_count(), q, groups, limits), std::move(packing)};
}

void for_each_free_set(const Graph& g, const Limits& limits, const std::function<void(Mask)>& visit) {
  const std::size_t n = g.vertex_count();
  if (n > limits.subset_cap || n > 63)
    throw CapExceeded("set enumeration over " + std::to_string(n) + " vertices exceeds the subset cap");
  std::uint64_t budget = limits.state_cap;
  std::vector<Mask> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbor_mask(v);
  // vertices are added in increasing order; both families are closed under subsets
  std::function<void(Mask, Vertex)> grow = [&](Mask u, Vertex from) {
    if (budget-- == 0) throw CapExceeded("more free vertex sets than the state cap");
    visit(u);
    for (Vertex v = from; v < n; ++v) {
      Mask next = u | bit(v);
      bool ok = g.directed() ? is_acyclic(g, next) : (nb[v] & u) == 0;
      if (ok) grow(next, v + 1);
    }
  };
  grow(0, 0);
}

DistanceBound distance_upper_bound(const Graph& g, std::size_t k, const Limits& limits) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) throw InvalidArgument("dimension must lie in 1..n");
  DistanceBound best{static_cast<long>(n - k + 1), 0};
  int largest = 0;
  for_each_free_set(g, limits, [&](Mask u) {
    if (static_cast<std::size_t>(popcount(neighborhood_mask(g, u))) > k - 1) return;
    if (popcount(u) > largest) {
      largest = popcount(u);
      best.witness = u;
    }
  });
  best.value = static_cast<long>(n) - static_cast<long>(k) + 1 - largest;
  return best;
}

std::uint64_t aq_closed_form(std::size_t n, std::size_t d, unsigned q) {
  constexpr std::uint64_t huge = std::uint64_t{1} << 62;
  if (d <= 1) return checked_pow(q, n, huge);
  if (d > n) return 1;
  std::uint64_t best = checked_pow(q, n - d + 1, huge);  // Singleton
  // sphere packing
  const std::size_t t = (d - 1) / 2;
  long double ball = 0, term = 1;
  for (std::size_t i = 0; i <= t; ++i) {
    if (i > 0) term = term * static_cast<long double>(n - i + 1) / static_cast<long double>(i) * (q - 1);
    ball += term;
  }
  long double space = std::pow(static_cast<long double>(q), static_cast<long double>(n));
  long double hamming = std::floor(space / ball + 1e-9L);
  if (hamming < static_cast<long double>(best)) best = static_cast<std::uint64_t>(hamming);
  // Plotkin: d > (1 - 1/q) n gives A <= floor(d / (d - (1 - 1/q) n))
  const long double theta = 1.0L - 1.0L / q;
  const long double slack = static_cast<long double>(d) - theta * static_cast<long double>(n);
  if (slack > 1e-12L) {
    long double p = std::floor(static_cast<long double>(d) / slack + 1e-9L);
    if (p < static_cast<long double>(best)) best = static_cast<std::uint64_t>(p);
  }
  if (q == 2 && d % 2 == 0 && n == 2 * d) best = std::min<std::uint64_t>(best, 4 * d);
  return std::max<std::uint64_t>(best, 1);
}

std::uint64_t aq_upper(std::size_t n, std::size_t d, unsigned q, const Limits& limits) {
  std::uint64_t closed = aq_closed_form(n, d, q);
  if (d <= 1 || d > n) return closed;
  std::uint64_t size = checked_pow(q, n, limits.aq_exact_cap);
  if (size > limits.aq_exact_cap) return closed;

  static std::mutex lock;
  static std::map<std::tuple<std::size_t, std::size_t, unsigned>, std::uint64_t> memo;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find({n, d, q});
    if (it != memo.end()) return it->second;
  }
  Space space(q, n);
  BitGraph far(static_cast<std::size_t>(size));
  for (std::uint64_t a = 0; a < size; ++a)
    for (std::uint64_t b = a + 1; b < size; ++b)
      if (static_cast<std::size_t>(popcount(space.diff_support(a, b))) >= d) far.add_edge(a, b);
  CliqueSearch search;
  search.forced = {0};  // translating a code keeps its distance
  search.stop_at = closed;
  search.node_limit = limits.search_cap;
  std::uint64_t exact = closed;
  try {
    exact = max_clique(far, search).size();
  } catch (const CapExceeded&) {
    return closed;  // not memoized: a larger budget may still settle it
  }
  std::lock_guard<std::mutex> guard(lock);
  memo[{n, d, q}] = exact;
  return exact;
}

AlphaBound alpha_bound(const Graph& g, std::size_t d, unsigned q, const Limits& limits) {
  const std::size_t n = g.vertex_count();
  if (d < 1) throw InvalidArgument("distance must be at least 1");
  AlphaBound best{std::numeric_limits<double>::infinity(), 0, 0};
  const double lnq = std::log(static_cast<double>(q));
  for_each_free_set(g, limits, [&](Mask u) {
    Mask nu = neighborhood_mask(g, u);
    auto rest = n - static_cast<std::size_t>(popcount(u | nu));
    double v = popcount(nu) + std::log(static_cast<double>(aq_upper(rest, d, q, limits))) / lnq;
    if (v < best.value - 1e-12) {
      best.value = v;
      best.witness = u;
    }
  });
  best.k_max = static_cast<long>(std::floor(best.value + 1e-9));
  return best;
}

}  // namespace rdss
