#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdss/common.hpp"
#include "rdss/vertex_set.hpp"

namespace rdss {

using Edge = std::pair<Vertex, Vertex>;

/// Storage graph. Vertices are 0..n-1. Undirected edges are kept once with
/// u < v and answer adjacency queries in both directions; directed edges are
/// kept as given, and `neighbors(v)` returns the out-neighbors of v (the
/// vertices v is repaired from).
///
/// Immutable after construction.
class Graph {
public:
  Graph() = default;
  /// Throws InvalidArgument on self-loops, out-of-range endpoints or duplicates.
  Graph(std::size_t n, std::vector<Edge> edges, bool directed);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return out_[v]; }
  /// Vertices with an edge into v (same as neighbors for undirected graphs).
  const std::vector<Vertex>& predecessors(Vertex v) const { return in_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return out_[v].size(); }

  /// Out-neighborhood bitmask; requires n <= 64.
  Mask neighbor_mask(Vertex v) const;
  bool fits_mask() const { return n_ <= 64; }
  Mask all_mask() const { return n_ >= 64 ? ~Mask{0} : bit(static_cast<unsigned>(n_)) - 1; }

  std::vector<Vertex> isolated_vertices() const;

  /// Subgraph induced on `keep` (vertices relabeled in increasing order).
  Graph induced(const std::vector<Vertex>& keep) const;
  /// Symmetric directed version of an undirected graph (each edge becomes a 2-cycle).
  Graph as_directed() const;
  /// Disjoint union, vertices of `other` shifted by vertex_count().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Mask> masks_;
};

/// Parses the `p rdss <n> <m> <u|d>` line format. Errors carry the line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

VertexSet neighborhood(const Graph& g, Vertex v);
/// Vertices outside U that receive an edge from U.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u);
/// Mask form of neighborhood_of_set for graphs with n <= 64.
Mask neighborhood_mask(const Graph& g, Mask u);

namespace graphs {
Graph path(std::size_t n);
Graph cycle(std::size_t n, bool directed = false);
Graph complete(std::size_t n, bool directed = false);
Graph edgeless(std::size_t n, bool directed = false);
}  // namespace graphs

}  // namespace rdss
