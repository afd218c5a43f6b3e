#pragma once

#include <array>
#include <vector>

#include "rdss/common.hpp"
#include "rdss/graph.hpp"
#include "rdss/vertex_set.hpp"

namespace rdss {

enum class SolveMode { exact, approx };

struct Matching {
  std::vector<Edge> edges;  // each with u < v
  std::size_t size() const { return edges.size(); }
};

/// Simple directed cycle, rotated so its smallest vertex comes first.
using Cycle = std::vector<Vertex>;
using CycleList = std::vector<Cycle>;

struct PathPacking {
  std::vector<std::array<Vertex, 3>> paths;  // (end, middle, end)
  bool exact = true;  // false when the greedy fallback produced it (a lower bound only)
  std::size_t size() const { return paths.size(); }
};

struct Bipartition {
  bool bipartite = true;
  std::vector<int> coloring;      // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;  // closed walk witness when not bipartite
};

/// Maximum cardinality matching (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);
/// Greedy maximal matching over edges in stored order.
Matching maximal_matching(const Graph& g);

/// exact: minimum cover (smallest mask among minima). approx: both endpoints of
/// a greedy maximal matching, at most twice the optimum.
VertexSet min_vertex_cover(const Graph& g, SolveMode mode, const Limits& limits = {});
/// Exact maximum independent set of an explicit undirected graph of any size.
VertexSet max_independent_set(const Graph& h);
/// Exact maximum independent set restricted to `allowed`, largest mask among maxima. n <= 64.
Mask max_independent_mask(const Graph& g, Mask allowed);

bool is_acyclic(const Graph& g, Mask subset);
/// Largest vertex set inducing an acyclic subgraph (largest mask among maxima).
Mask max_acyclic_mask(const Graph& g, const Limits& limits = {});
VertexSet min_fvs(const Graph& g, const Limits& limits = {});

CycleList enumerate_cycles(const Graph& g, const Limits& limits = {});
CycleList max_vertex_disjoint_cycles(const Graph& g, const Limits& limits = {});

std::vector<VertexSet> clique_partition(const Graph& g, SolveMode mode, const Limits& limits = {});
VertexSet max_dissociation_set(const Graph& g, const Limits& limits = {});
PathPacking vertex_disjoint_3paths(const Graph& g, const Limits& limits = {});
Bipartition is_bipartite(const Graph& g);

/// Every 3-vertex path (a, b, c) with a < c, b the middle vertex.
std::vector<std::array<Vertex, 3>> all_3paths(const Graph& g);

}  // namespace rdss
