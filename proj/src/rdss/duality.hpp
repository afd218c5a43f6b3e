#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rdss/code.hpp"
#include "rdss/graph.hpp"
#include "rdss/linear.hpp"
#include "rdss/lp.hpp"

namespace rdss {

/// Subset of F_q^n given as sorted, distinct lexicographic indices.
using PointSet = std::vector<std::uint64_t>;

PointSet points(const Space& space, const Code& c);
PointSet points(const Space& space, const std::vector<Word>& words);

/// 1 - |F| / q^n.
Rational q_uncovered(const Space& space, const PointSet& f);

/// Generators d_1..d_l whose binary span D satisfies C + D = F_q^n.
/// Coefficient vector (a_1..a_l) corresponds to the label integer with a_i as bit i-1.
struct CoveringFamily {
  unsigned q = 2;
  std::size_t n = 0;
  std::vector<Word> generators;
  std::vector<std::uint64_t> span;  // span[a] = sum of a_i d_i, as a point index
  std::size_t distinct = 1;         // |D|
  std::vector<Rational> uncovered;  // Q(F_t) along the greedy run, t = 0..l

  std::size_t size() const { return generators.size(); }
  /// Recomputes sum a_i d_i directly from the generators.
  Word combine(std::uint64_t label) const;
};

/// Greedy doubling: F <- F u (F + z) with z maximizing the covered part (smallest z on ties).
/// Candidate shifts are scored on `limits.threads` workers.
CoveringFamily greedy_covering(const Code& c, const Limits& limits = {});

/// ceil(log2(q^n / |C|) + log2(min{n ln q, 1 + ln |C|})).
long covering_generator_bound(unsigned q, std::size_t n, std::uint64_t code_size);

bool covers(const Space& space, const PointSet& c, const CoveringFamily& family);
std::string serialize_covering(const CoveringFamily& family);
/// Generators from the serialize_covering format.
std::vector<Word> parse_covering(std::string_view text, unsigned q, std::size_t n);

/// An index code: encoder label, and per-receiver decoders from (label, side information).
struct IndexCode {
  unsigned q = 2;
  std::size_t n = 0;
  std::uint64_t label_count = 1;  // distinct labels the encoder can emit
  double length = 0;              // log_q(label_count)
  std::size_t transmitted = 0;    // q-ary symbols sent per use
  std::function<std::uint64_t(const Word&)> encode;
  std::function<Symbol(Vertex, std::uint64_t, const Word&)> decode;
};

/// Covering-based index code: y is labeled by the smallest coefficient integer a
/// with y in C + x_a, and receiver j applies the recovery function of C + x_a.
IndexCode index_from_rdss(const Graph& g, const Code& c, const CoveringFamily& family, const Limits& limits = {});
/// The syndrome code seen through the generic interface.
IndexCode index_from_linear(const LinearIndexCode& code, std::size_t n);

/// Checks every receiver on every y in F_q^n.
bool check_index_code(const Graph& g, const IndexCode& code, const Limits& limits = {});

/// Largest encoder fiber (smallest label on ties).
Code rdss_from_index(const Graph& g, const IndexCode& code, const Limits& limits = {});

/// n - log_q|C| + log_q(min{n ln q, 1 + ln|C|}), the guaranteed index length.
double index_length_bound(unsigned q, std::size_t n, std::uint64_t code_size);
/// label_count * |C| <= q^n * min{n ln q, 1 + ln|C|}, the same bound without logarithms.
bool within_index_bound(unsigned q, std::size_t n, std::uint64_t code_size, std::uint64_t label_count);

/// sum over x of |(C + x) n B| == |C| |B|.
bool bassalygo_elias_check(const Space& space, const PointSet& c, const PointSet& b);
/// q^-n sum over x of Q(F u (F + x)) == Q(F)^2, in exact arithmetic.
bool q_recursion_check(const Space& space, const PointSet& f);

}  // namespace rdss
