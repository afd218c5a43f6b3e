#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdss/common.hpp"
#include "rdss/graph.hpp"

namespace rdss {

using Word = std::vector<Symbol>;

/// The ambient space F_q^n with words indexed in lexicographic order
/// (first coordinate most significant).
class Space {
public:
  Space(unsigned q, std::size_t n);
  /// Throws CapExceeded when q^n > cap.
  Space(unsigned q, std::size_t n, std::uint64_t cap);

  unsigned alphabet() const { return q_; }
  std::size_t length() const { return n_; }
  /// q^n, or 0 if it does not fit in 64 bits.
  std::uint64_t size() const { return size_; }

  std::uint64_t index(std::span<const Symbol> w) const;
  Word word(std::uint64_t index) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  /// Coordinates where a and b differ, as a vertex mask (n <= 64).
  Mask diff_support(std::uint64_t a, std::uint64_t b) const;

private:
  unsigned q_;
  std::size_t n_;
  std::uint64_t size_;
};

/// Explicit code: a nonempty set of distinct length-n words over {0..q-1},
/// kept in lexicographic order. Symbol i is the content of vertex i.
class Code {
public:
  Code(unsigned q, std::size_t n, std::vector<Word> words);

  unsigned alphabet() const { return q_; }
  std::size_t length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const;

  /// log_q |C| in q-ary units.
  double dimension() const;
  double dimension_bits() const;

  friend bool operator==(const Code&, const Code&) = default;

private:
  unsigned q_;
  std::size_t n_;
  std::vector<Word> words_;
};

Code parse_code(std::string_view text);
std::string serialize_code(const Code& c);
std::string format_word(const Word& w, unsigned q);
/// Digit string for q <= 10, comma-separated integers otherwise.
Word parse_word(std::string_view token, unsigned q, std::size_t n, std::size_t line = 0);

/// x and y are confusable when some vertex differs while its whole
/// neighborhood agrees.
bool confusable(const Graph& g, const Word& x, const Word& y);

/// Subsets T of V (as masks) for which a difference supported exactly on T is
/// confusable: some i in T has N(i) disjoint from T. Indexed by mask, n <= 30.
std::vector<bool> confusable_supports(const Graph& g);

struct Confusion {
  Word x, y;
  Vertex vertex;
};

/// Realizes the recovery functions f_i as lookup tables from the restriction
/// of a codeword to N(i) to the symbol at i.
class RecoveryTables {
public:
  RecoveryTables() = default;
  explicit RecoveryTables(std::size_t n) : tables_(n) {}

  void set(Vertex i, Word side, Symbol value) { tables_[i][std::move(side)] = value; }
  /// side lists the neighbor symbols in increasing neighbor order.
  std::optional<Symbol> recover(Vertex i, const Word& side) const;
  const std::map<Word, Symbol>& table(Vertex i) const { return tables_[i]; }
  std::size_t vertex_count() const { return tables_.size(); }

private:
  std::vector<std::map<Word, Symbol>> tables_;
};

/// Restriction of w to N(i), in increasing neighbor order.
Word side_information(const Graph& g, Vertex i, std::span<const Symbol> w);

struct RdssCheck {
  bool ok = false;
  RecoveryTables tables;            // filled when ok
  std::optional<Confusion> witness;  // lexicographically first confusable pair otherwise
  explicit operator bool() const { return ok; }
};

RdssCheck verify_rdss(const Graph& g, const Code& c);

/// Largest RDSS code on g (optionally also with pairwise Hamming distance >= min_distance),
/// found as a maximum independent set of the confusion graph.
Code max_rdss_code(const Graph& g, unsigned q, std::size_t min_distance, const Limits& limits = {});

struct CapacityResult {
  Code code;
  double dimension;  // q-ary units
  double bits;
};

CapacityResult capacity_exact(const Graph& g, unsigned q, const Limits& limits = {});

struct QSetSize {
  std::uint64_t size;  // |Q_q(G)|
  double turan_bound;  // n - log_q(|Q| + 1)
};

QSetSize q_set_size(const Graph& g, unsigned q, const Limits& limits = {});

struct DegreeBound {
  double value;     // -log_q[(q-1) sum_v q^-(deg v + 1)]
  bool consistent;  // positive and not above the Turán bound (when one is given)
  std::string note;
};

DegreeBound degree_distribution_bound(const Graph& g, unsigned q, std::optional<double> turan = std::nullopt);

struct MinDistance {
  std::size_t value;
  bool singleton = false;  // single codeword: value is n + 1 by convention
};

MinDistance min_distance(const Code& c);
std::size_t hamming_distance(const Word& a, const Word& b);

Code translate(const Code& c, const Word& shift);

}  // namespace rdss
