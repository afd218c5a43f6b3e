#pragma once

#include "rdss/code.hpp"
#include "rdss/field.hpp"
#include "rdss/graph.hpp"

namespace rdss {

/// A fits G: nonzero diagonal, and a_ij = 0 unless j is a neighbor of i.
bool fits(const Graph& g, const FieldMatrix& a);

struct MinrankResult {
  std::size_t rank;
  FieldMatrix witness;       // fitting matrix of that rank, unit diagonal
  std::uint64_t search_space;  // q^(free entries) after fixing the diagonal to 1
};

/// Exact minrank over F_q (q prime). Throws CapExceeded when the search space
/// exceeds limits.minrank_cap; the identity matrix always gives minrank <= n.
MinrankResult minrank(const Graph& g, unsigned q, const Limits& limits = {});

/// Null space of a fitting matrix as an explicit linear RDSS code.
Code linear_rdss_from_fit(const Graph& g, const FieldMatrix& a, const Limits& limits = {});

/// Closed under addition and scalar multiplication mod q.
bool is_linear(const Code& c);

/// Syndrome index code of a linear RDSS code: broadcast H y, and receiver i
/// recovers y_i as a linear combination of the syndrome and its side information.
struct LinearIndexCode {
  struct Decoder {
    std::vector<Symbol> syndrome_coeffs;  // one per parity row
    std::vector<Symbol> side_coeffs;      // one per neighbor, increasing neighbor order
  };

  unsigned q = 2;
  FieldMatrix parity;  // l x n, null space = the RDSS code
  std::vector<Decoder> decoders;

  std::size_t length() const { return parity.rows(); }
  std::vector<Symbol> encode(std::span<const Symbol> y) const;
  Symbol decode(Vertex i, std::span<const Symbol> syndrome, std::span<const Symbol> side) const;
};

LinearIndexCode syndrome_index_code(const Graph& g, const Code& c);

/// Decodes every vertex for every y in F_q^n. Throws CapExceeded past the state cap.
bool check_round_trip(const Graph& g, const LinearIndexCode& code, const Limits& limits = {});

}  // namespace rdss
