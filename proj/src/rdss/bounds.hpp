#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdss/code.hpp"
#include "rdss/field.hpp"
#include "rdss/graph.hpp"

namespace rdss {

enum class BoundKind { lower, upper, info };

struct BoundEntry {
  std::string name;
  BoundKind kind;
  double value;  // q-ary units
  std::string detail;
  std::vector<Vertex> vertices;                 // vertex witness (cover, FVS, ...)
  std::vector<std::vector<Vertex>> groups;      // matching edges, cycles, cliques
  std::optional<FieldMatrix> matrix;            // minrank witness
};

struct OmittedBound {
  std::string name;
  std::string reason;
  bool infeasible;  // a cap was hit (as opposed to not applicable)
};

struct BoundsReport {
  unsigned q = 2;
  std::vector<BoundEntry> entries;
  std::vector<OmittedBound> omitted;
  double lower = 0;
  double upper = 0;
  std::optional<double> exact;  // exact capacity when it could be computed, reported beside the interval

  bool partial() const;
};

/// Runs every applicable bound; a bound whose preconditions fail is listed in
/// `omitted`. Throws Error if some lower bound exceeds some upper bound.
BoundsReport bounds_report(const Graph& g, unsigned q, const Limits& limits = {}, bool with_exact = true);

/// 4K ln(4K) ln(log2(4K)), defined for K > 1/2.
double seymour_bound(double k);

}  // namespace rdss
