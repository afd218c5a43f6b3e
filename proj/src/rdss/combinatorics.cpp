#include "rdss/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "rdss/clique.hpp"

namespace rdss {

namespace {

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidArgument(std::string(what) + " requires an undirected graph");
}

void require_directed(const Graph& g, const char* what) {
  if (!g.directed()) throw InvalidArgument(std::string(what) + " requires a directed graph");
}

void require_subset_cap(const Graph& g, const Limits& limits, const char* what) {
  if (g.vertex_count() > limits.subset_cap || g.vertex_count() > 62)
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                      " vertices exceeds the exact-search threshold of " + std::to_string(limits.subset_cap));
}

// Edmonds' blossom shrinking, BFS from each free vertex.
class Blossom {
public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, -1), p_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<long> run() {
    for (auto [u, v] : g_.edges())
      if (match_[u] == -1 && match_[v] == -1) {
        match_[u] = v;
        match_[v] = u;
      }
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      long u = find_path(static_cast<long>(v));
      while (u != -1) {
        long pv = p_[u], ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

private:
  long lca(long a, long b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(long v, long b, long child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  long find_path(long root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<long>(i);
    used_[root] = true;
    std::deque<long> q{root};
    while (!q.empty()) {
      long v = q.front();
      q.pop_front();
      for (Vertex t : g_.neighbors(static_cast<Vertex>(v))) {
        long to = t;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          long cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push_back(static_cast<long>(i));
              }
            }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<long> match_, p_, base_;
  std::vector<bool> used_, blossom_;
};

// Upper bound on the independence number of `r`: number of cliques in a greedy clique cover.
int clique_cover_bound(const Graph& g, Mask r) {
  int count = 0;
  while (r) {
    int u = lowest_bit(r);
    Mask clique_cand = r & g.neighbor_mask(u);
    r &= ~bit(u);
    while (clique_cand) {
      int w = lowest_bit(clique_cand);
      r &= ~bit(w);
      clique_cand &= g.neighbor_mask(w) & ~bit(w);
    }
    ++count;
  }
  return count;
}

}  // namespace

Matching max_matching(const Graph& g) {
  require_undirected(g, "max_matching");
  auto match = Blossom(g).run();
  Matching m;
  for (std::size_t v = 0; v < match.size(); ++v)
    if (match[v] > static_cast<long>(v)) m.edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(match[v]));
  return m;
}

Matching maximal_matching(const Graph& g) {
  require_undirected(g, "maximal_matching");
  std::vector<bool> used(g.vertex_count(), false);
  Matching m;
  for (auto [u, v] : g.edges())
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      m.edges.emplace_back(u, v);
    }
  return m;
}

Mask max_independent_mask(const Graph& g, Mask allowed) {
  if (g.directed()) throw InvalidArgument("independent sets are computed on undirected graphs");
  Mask best = 0;
  int best_size = -1;
  std::function<void(Mask, Mask, int)> rec = [&](Mask chosen, Mask rem, int size) {
    if (!rem) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(g, rem) <= best_size) return;
    int v = highest_bit(rem);
    rec(chosen | bit(v), rem & ~bit(v) & ~g.neighbor_mask(v), size + 1);
    rec(chosen, rem & ~bit(v), size);
  };
  rec(0, allowed & g.all_mask(), 0);
  return best;
}

VertexSet min_vertex_cover(const Graph& g, SolveMode mode, const Limits& limits) {
  require_undirected(g, "min_vertex_cover");
  if (mode == SolveMode::approx) {
    VertexSet s(g.vertex_count());
    for (auto [u, v] : maximal_matching(g).edges) {
      s.insert(u);
      s.insert(v);
    }
    return s;
  }
  require_subset_cap(g, limits, "min_vertex_cover");
  Mask is = max_independent_mask(g, g.all_mask());
  return VertexSet::from_mask(g.vertex_count(), g.all_mask() & ~is);
}

VertexSet max_independent_set(const Graph& h) {
  require_undirected(h, "max_independent_set");
  BitGraph comp(h.vertex_count());
  for (Vertex u = 0; u < h.vertex_count(); ++u)
    for (Vertex v = u + 1; v < h.vertex_count(); ++v)
      if (!h.has_edge(u, v)) comp.add_edge(u, v);
  VertexSet s(h.vertex_count());
  for (auto v : max_clique(comp)) s.insert(static_cast<Vertex>(v));
  return s;
}

bool is_acyclic(const Graph& g, Mask subset) {
  // Kahn's algorithm on the induced subgraph.
  Mask rem = subset;
  bool progress = true;
  while (rem && progress) {
    progress = false;
    for (Mask m = rem; m; m &= m - 1) {
      int v = lowest_bit(m);
      if (!(g.neighbor_mask(v) & rem)) {
        rem &= ~bit(v);
        progress = true;
      }
    }
  }
  return rem == 0;
}

namespace {

// Vertices reachable from `from` using only vertices of `within`.
Mask reach(const Graph& g, Mask from, Mask within) {
  Mask seen = from & within, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(lowest_bit(m));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool closes_cycle(const Graph& g, Mask set, int v) {
  Mask within = set | bit(v);
  return reach(g, g.neighbor_mask(v) & within, within) & bit(v);
}

}  // namespace

Mask max_acyclic_mask(const Graph& g, const Limits& limits) {
  require_subset_cap(g, limits, "max_acyclic_set");
  Mask best = 0;
  int best_size = -1;
  // Undirected graphs: acyclic as a symmetric digraph means independent.
  std::function<void(Mask, Mask, int)> rec = [&](Mask chosen, Mask rem, int size) {
    if (size + popcount(rem) <= best_size) return;
    if (!rem) {
      best_size = size;
      best = chosen;
      return;
    }
    int v = highest_bit(rem);
    rem &= ~bit(v);
    if (!closes_cycle(g, chosen, v)) rec(chosen | bit(v), rem, size + 1);
    rec(chosen, rem, size);
  };
  rec(0, g.all_mask(), 0);
  return best;
}

VertexSet min_fvs(const Graph& g, const Limits& limits) {
  require_directed(g, "min_fvs");
  Mask acyclic = max_acyclic_mask(g, limits);
  return VertexSet::from_mask(g.vertex_count(), g.all_mask() & ~acyclic);
}

CycleList enumerate_cycles(const Graph& g, const Limits& limits) {
  require_directed(g, "enumerate_cycles");
  const std::size_t n = g.vertex_count();
  CycleList out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  for (Vertex s = 0; s < n; ++s) {
    // vertices >= s that can reach s inside {v >= s}
    std::vector<bool> can_reach(n, false);
    can_reach[s] = true;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex u : g.predecessors(v))
        if (u > s && !can_reach[u]) {
          can_reach[u] = true;
          q.push_back(u);
        }
    }
    std::function<void(Vertex)> dfs = [&](Vertex v) {
      for (Vertex u : g.neighbors(v)) {
        if (u == s) {
          out.push_back(path);
          if (out.size() > limits.cycle_cap)
            throw CapExceeded("more than " + std::to_string(limits.cycle_cap) + " directed cycles");
        } else if (u > s && can_reach[u] && !on_path[u]) {
          on_path[u] = true;
          path.push_back(u);
          dfs(u);
          path.pop_back();
          on_path[u] = false;
        }
      }
    };
    path = {s};
    on_path[s] = true;
    dfs(s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleList max_vertex_disjoint_cycles(const Graph& g, const Limits& limits) {
  require_directed(g, "max_vertex_disjoint_cycles");
  require_subset_cap(g, limits, "max_vertex_disjoint_cycles");
  auto cycles = enumerate_cycles(g, limits);
  const std::size_t n = g.vertex_count();
  std::vector<Mask> masks(cycles.size());
  std::vector<std::vector<std::size_t>> by_vertex(n);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (Vertex v : cycles[i]) masks[i] |= bit(v);
    for (Vertex v : cycles[i]) by_vertex[v].push_back(i);
  }
  std::vector<std::size_t> chosen, best;
  Mask on_cycle = 0;
  for (Mask m : masks) on_cycle |= m;
  std::function<void(Mask)> rec = [&](Mask rem) {
    // drop vertices no longer on any cycle inside rem
    Mask live = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if ((masks[i] & rem) == masks[i]) live |= masks[i];
    rem &= live;
    if (chosen.size() + static_cast<std::size_t>(popcount(rem)) / 2 <= best.size()) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    if (!rem) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    int v = lowest_bit(rem);
    for (std::size_t i : by_vertex[v]) {
      if ((masks[i] & rem) != masks[i]) continue;
      chosen.push_back(i);
      rec(rem & ~masks[i]);
      chosen.pop_back();
    }
    rec(rem & ~bit(v));
  };
  rec(on_cycle);
  CycleList out;
  std::sort(best.begin(), best.end());
  for (auto i : best) out.push_back(cycles[i]);
  return out;
}

std::vector<VertexSet> clique_partition(const Graph& g, SolveMode mode, const Limits& limits) {
  require_undirected(g, "clique_partition");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> parts;
  if (mode == SolveMode::approx) {
    std::vector<bool> used(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<Vertex> k{v};
      used[v] = true;
      for (Vertex u = v + 1; u < n; ++u) {
        if (used[u]) continue;
        if (std::all_of(k.begin(), k.end(), [&](Vertex w) { return g.has_edge(u, w); })) {
          k.push_back(u);
          used[u] = true;
        }
      }
      parts.push_back(std::move(k));
    }
  } else {
    require_subset_cap(g, limits, "clique_partition");
    const auto lower = static_cast<std::size_t>(popcount(max_independent_mask(g, g.all_mask())));
    std::vector<Mask> cur, best_parts;
    std::size_t best = n + 1;
    bool done = false;
    std::function<void(Vertex)> rec = [&](Vertex v) {
      if (done) return;
      if (v == n) {
        if (cur.size() < best) {
          best = cur.size();
          best_parts = cur;
          if (best <= lower) done = true;
        }
        return;
      }
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if ((g.neighbor_mask(v) & cur[i]) != cur[i]) continue;
        cur[i] |= bit(v);
        rec(v + 1);
        cur[i] &= ~bit(v);
        if (done) return;
      }
      if (cur.size() + 1 < best) {
        cur.push_back(bit(v));
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
    for (Mask m : best_parts) {
      std::vector<Vertex> k;
      for (Mask x = m; x; x &= x - 1) k.push_back(static_cast<Vertex>(lowest_bit(x)));
      parts.push_back(std::move(k));
    }
  }
  std::vector<VertexSet> out;
  for (auto& k : parts) {
    VertexSet s(n);
    for (Vertex v : k) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

VertexSet max_dissociation_set(const Graph& g, const Limits& limits) {
  require_undirected(g, "max_dissociation_set");
  require_subset_cap(g, limits, "max_dissociation_set");
  Mask best = 0;
  int best_size = -1;
  // In any clique a dissociation set keeps at most two vertices.
  auto bound = [&](Mask r) {
    int total = 0;
    while (r) {
      int u = lowest_bit(r);
      Mask cand = r & g.neighbor_mask(u);
      r &= ~bit(u);
      int k = 1;
      while (cand) {
        int w = lowest_bit(cand);
        r &= ~bit(w);
        cand &= g.neighbor_mask(w) & ~bit(w);
        ++k;
      }
      total += std::min(k, 2);
    }
    return total;
  };
  std::function<void(Mask, Mask, int)> rec = [&](Mask chosen, Mask rem, int size) {
    // vertices whose addition would break induced degree <= 1
    Mask saturated = 0;
    for (Mask m = chosen; m; m &= m - 1) {
      int v = lowest_bit(m);
      if (g.neighbor_mask(v) & chosen) saturated |= bit(v);
    }
    for (Mask m = rem; m; m &= m - 1) {
      int w = lowest_bit(m);
      Mask nb = g.neighbor_mask(w);
      if (popcount(nb & chosen) >= 2 || (nb & saturated)) rem &= ~bit(w);
    }
    if (!rem) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + bound(rem) <= best_size) return;
    int v = highest_bit(rem);
    rec(chosen | bit(v), rem & ~bit(v), size + 1);
    rec(chosen, rem & ~bit(v), size);
  };
  rec(0, g.all_mask(), 0);
  return VertexSet::from_mask(g.vertex_count(), best);
}

std::vector<std::array<Vertex, 3>> all_3paths(const Graph& g) {
  require_undirected(g, "all_3paths");
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const auto& nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) out.push_back({nb[i], b, nb[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathPacking vertex_disjoint_3paths(const Graph& g, const Limits& limits) {
  auto paths = all_3paths(g);
  PathPacking result;
  auto pmask = [](const std::array<Vertex, 3>& p) { return bit(p[0]) | bit(p[1]) | bit(p[2]); };
  if (g.vertex_count() > limits.subset_cap || g.vertex_count() > 62) {
    std::vector<bool> used(g.vertex_count(), false);
    for (const auto& p : paths)
      if (!used[p[0]] && !used[p[1]] && !used[p[2]]) {
        used[p[0]] = used[p[1]] = used[p[2]] = true;
        result.paths.push_back(p);
      }
    result.exact = false;
    return result;
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> by_vertex(n);
  std::vector<Mask> masks(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    masks[i] = pmask(paths[i]);
    for (Vertex v : paths[i]) by_vertex[v].push_back(i);
  }
  std::vector<std::size_t> chosen, best;
  std::function<void(Mask)> rec = [&](Mask rem) {
    Mask live = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if ((masks[i] & rem) == masks[i]) live |= masks[i];
    rem &= live;
    if (chosen.size() > best.size()) best = chosen;
    if (chosen.size() + static_cast<std::size_t>(popcount(rem)) / 3 <= best.size()) return;
    int v = lowest_bit(rem);
    for (std::size_t i : by_vertex[v]) {
      if ((masks[i] & rem) != masks[i]) continue;
      chosen.push_back(i);
      rec(rem & ~masks[i]);
      chosen.pop_back();
    }
    rec(rem & ~bit(v));
  };
  rec(g.all_mask());
  std::sort(best.begin(), best.end());
  for (auto i : best) result.paths.push_back(paths[i]);
  return result;
}

Bipartition is_bipartite(const Graph& g) {
  require_undirected(g, "is_bipartite");
  const std::size_t n = g.vertex_count();
  Bipartition r;
  r.coloring.assign(n, -1);
  std::vector<long> parent(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (r.coloring[s] != -1) continue;
    r.coloring[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (r.coloring[u] == -1) {
          r.coloring[u] = 1 - r.coloring[v];
          parent[u] = v;
          q.push_back(u);
        } else if (r.coloring[u] == r.coloring[v]) {
          // odd cycle: tree paths from u and v up to their common ancestor, plus edge (v,u)
          std::vector<Vertex> pu{u}, pv{v};
          auto depth = [&](Vertex x) {
            int d = 0;
            while (parent[x] != -1) {
              x = static_cast<Vertex>(parent[x]);
              ++d;
            }
            return d;
          };
          Vertex a = u, b = v;
          int da = depth(a), db = depth(b);
          while (da > db) { a = static_cast<Vertex>(parent[a]); pu.push_back(a); --da; }
          while (db > da) { b = static_cast<Vertex>(parent[b]); pv.push_back(b); --db; }
          while (a != b) {
            a = static_cast<Vertex>(parent[a]);
            b = static_cast<Vertex>(parent[b]);
            pu.push_back(a);
            pv.push_back(b);
          }
          // anc .. v, then u .. (child of anc)
          r.bipartite = false;
          r.coloring.clear();
          r.odd_cycle.assign(pv.rbegin(), pv.rend());
          r.odd_cycle.insert(r.odd_cycle.end(), pu.begin(), pu.end() - 1);
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace rdss
