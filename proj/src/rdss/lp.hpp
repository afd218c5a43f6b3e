#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rdss {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Relation { le, ge, eq };

/// maximize c.x subject to a_r . x (rel_r) b_r, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Relation> rel;
  std::vector<Rational> b;
  std::vector<Rational> c;

  void add(std::vector<Rational> row, Relation r, Rational rhs) {
    a.push_back(std::move(row));
    rel.push_back(r);
    b.push_back(std::move(rhs));
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase tableau simplex in exact rational arithmetic with Bland's rule,
/// so it always terminates and the vertex returned is deterministic.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace rdss
