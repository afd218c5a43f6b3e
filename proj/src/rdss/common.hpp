#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdss {

using Vertex = std::uint32_t;
using Symbol = std::uint32_t;
using Mask = std::uint64_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An exact search or enumeration would exceed a configured limit.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Precondition violated by the caller (wrong graph kind, non-prime field, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Configurable limits for the exact searches. All of them can be overridden
/// from the command line.
struct Limits {
  std::uint64_t state_cap = std::uint64_t{1} << 20;  // q^n strings enumerated
  unsigned subset_cap = 30;                          // vertices for subset searches
  std::uint64_t cycle_cap = 100000;                  // enumerated directed cycles
  std::uint64_t minrank_cap = std::uint64_t{1} << 26;  // fitting matrices searched
  std::uint64_t clique_cap = std::uint64_t{1} << 14;   // vertices of a materialized confusion graph
  std::uint64_t aq_exact_cap = 64;                     // q^n for brute-force A_q(n,d)
  std::uint64_t search_cap = std::uint64_t{1} << 22;   // branch-and-bound nodes of one clique search
  unsigned threads = 1;
};

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline int highest_bit(Mask m) { return 63 - __builtin_clzll(m); }
inline Mask bit(unsigned i) { return Mask{1} << i; }

/// Saturating integer power; returns `limit + 1` once the value exceeds `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace rdss
