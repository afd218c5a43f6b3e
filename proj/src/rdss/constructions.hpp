#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdss/code.hpp"
#include "rdss/combinatorics.hpp"
#include "rdss/graph.hpp"
#include "rdss/lp.hpp"

namespace rdss {

/// Replicates one free symbol over each group of vertices; other vertices store 0.
/// Throws CapExceeded if q^(groups) exceeds the state cap.
Code replication_code(std::size_t n, unsigned q, const std::vector<std::vector<Vertex>>& groups,
                      const Limits& limits = {});

/// One symbol per edge of a maximum matching.
Code matching_code(const Graph& g, unsigned q, const Limits& limits = {});
/// One symbol per cycle of a maximum vertex-disjoint cycle packing.
Code cycle_replication_code(const Graph& g, unsigned q, const Limits& limits = {});
/// Per clique of size t: t-1 free symbols and a parity symbol making the clique sum 0 mod q.
Code clique_partition_code(const Graph& g, unsigned q, SolveMode mode = SolveMode::exact, const Limits& limits = {});

struct CyclePacking {
  CycleList cycles;                    // cycles with positive weight, canonical order
  std::vector<Rational> weights;       // phi(C)
  Rational value;                      // K
  BigInt denominator = 1;              // p
  std::vector<BigInt> multiplicities;  // n(C) = p phi(C)
  std::size_t enumerated = 0;          // cycles offered to the LP
  bool balanced = false;               // ties broken by max-min fairness
};

/// Maximum fractional cycle packing, solved exactly over all enumerated cycles.
/// Among optima the weights are spread max-min fairly when there are at most
/// `fair_limit` cycles; otherwise the simplex vertex is returned as is.
CyclePacking fractional_cycle_packing(const Graph& g, const Limits& limits = {}, std::size_t fair_limit = 64);
/// Just K, without tie-breaking.
Rational fractional_cycle_packing_value(const Graph& g, const Limits& limits = {});

/// Load at each vertex: sum of phi(C) over packed cycles through it.
std::vector<Rational> vertex_loads(std::size_t n, const CyclePacking& p);

/// Vector code built from a cycle packing: message coordinate k belongs to cycle
/// owner[k] and is stored on every vertex of that cycle.
class VectorCode {
public:
  VectorCode(const Graph& g, const CyclePacking& packing, unsigned q);

  unsigned alphabet() const { return q_; }
  std::size_t message_length() const { return owner_.size(); }
  std::uint64_t sub_length() const { return p_; }  // symbols per vertex allowed
  const CyclePacking& packing() const { return packing_; }
  /// Message coordinates held by v, increasing.
  const std::vector<std::size_t>& stored(Vertex v) const { return stored_[v]; }
  std::size_t max_load() const;

  std::vector<std::vector<Symbol>> encode(const std::vector<Symbol>& message) const;
  /// Rebuilds v's content from its out-neighbors' contents only.
  std::vector<Symbol> repair(Vertex v, const std::vector<std::vector<Symbol>>& contents) const;

private:
  const Graph* g_;
  CyclePacking packing_;
  unsigned q_;
  std::uint64_t p_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> stored_;
};

/// Erases each vertex in turn for `trials` random messages and checks repair.
bool check_vector_repair(const VectorCode& code, std::size_t n, std::size_t trials, std::uint64_t seed);

std::string serialize_vector_code(const VectorCode& code, std::size_t n);

struct VectorCodeFile {
  std::size_t n = 0;
  unsigned q = 2;
  CyclePacking packing;  // weights rebuilt as n(C) / p
};

/// Reads the serialize_vector_code format back; K must equal the sum of the weights.
VectorCodeFile parse_vector_code(std::string_view text);

}  // namespace rdss
