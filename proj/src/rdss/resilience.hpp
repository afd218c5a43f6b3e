#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rdss/code.hpp"
#include "rdss/combinatorics.hpp"
#include "rdss/graph.hpp"

namespace rdss {

struct CoopCheck {
  bool ok = true;
  std::vector<Vertex> failed;  // the connected set U that cannot be repaired
  Word x, y;                   // two codewords agreeing outside U on N(U) but not on U
  explicit operator bool() const { return ok; }
};

/// Every connected U with |U| <= t must be determined by the codeword on N(U).
/// Undirected graphs only, t in {1, 2}.
CoopCheck verify_cooperative(const Graph& g, const Code& c, unsigned t);

/// n minus the largest dissociation set, the smallest 3-path vertex cover.
std::size_t coop_upper_bound(const Graph& g, const Limits& limits = {});

struct CoopConstruction {
  Code code;
  PathPacking packing;
};
/// One replicated symbol per packed 3-path.
CoopConstruction coop_construct(const Graph& g, unsigned q, const Limits& limits = {});

/// Calls `visit` with every independent set (undirected) or induced-acyclic vertex
/// set (directed) as a mask, the empty set included. Throws CapExceeded past
/// limits.state_cap sets or limits.subset_cap vertices.
void for_each_free_set(const Graph& g, const Limits& limits, const std::function<void(Mask)>& visit);

struct DistanceBound {
  long value;   // d <= value
  Mask witness;  // the maximizing U
};

/// d <= n - k + 1 - max{|U| : U free, |N(U)| <= k - 1}, for 1 <= k <= n.
DistanceBound distance_upper_bound(const Graph& g, std::size_t k, const Limits& limits = {});

/// Upper bound on A_q(n, d): exact by maximum clique when q^n <= limits.aq_exact_cap,
/// otherwise the least of the Singleton, sphere-packing and Plotkin bounds.
std::uint64_t aq_upper(std::size_t n, std::size_t d, unsigned q, const Limits& limits = {});
/// The closed-form part only.
std::uint64_t aq_closed_form(std::size_t n, std::size_t d, unsigned q);

struct AlphaBound {
  double value;   // min over U of |N(U)| + log_q A_q(n - |U u N(U)|, d)
  long k_max;     // floor of value
  Mask witness;
};

AlphaBound alpha_bound(const Graph& g, std::size_t d, unsigned q, const Limits& limits = {});

}  // namespace rdss
