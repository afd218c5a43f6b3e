#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "rdss/common.hpp"

namespace rdss {

/// Dense undirected graph on bit-packed adjacency rows. Used for the large
/// implicit graphs (confusion graphs, distance graphs) handed to the clique
/// search.
class BitGraph {
public:
  explicit BitGraph(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U; }
  const std::uint64_t* row(std::size_t v) const { return rows_.data() + v * words_; }
  std::size_t degree(std::size_t v) const;
  BitGraph complement() const;

private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct CliqueSearch {
  /// Known clique used as the starting incumbent (may be empty).
  std::vector<std::size_t> initial;
  /// Vertices every reported clique must contain. Sound for vertex-transitive
  /// graphs, where some maximum clique contains any chosen vertex.
  std::vector<std::size_t> forced;
  /// Stop as soon as a clique of this size is found.
  std::size_t stop_at = std::numeric_limits<std::size_t>::max();
  /// Branch-and-bound nodes allowed before giving up with CapExceeded.
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
/// Deterministic for a given graph and search configuration. Throws CapExceeded
/// once the node limit is spent.
std::vector<std::size_t> max_clique(const BitGraph& g, const CliqueSearch& search = {});

}  // namespace rdss
