#include "rdss/lp.hpp"

#include <optional>
#include <stdexcept>

namespace rdss {

namespace {

class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational f = t_[r][c];
    for (auto& v : t_[r]) v /= f;
    for (std::size_t k = 0; k < t_.size(); ++k) {
      if (k == r || t_[k][c] == 0) continue;
      Rational m = t_[k][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[k][j] -= m * t_[r][j];
    }
    basis_[r] = c;
  }

  // Maximizes obj over columns flagged in `allowed`. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& obj, const std::vector<bool>& allowed) {
    for (;;) {
      std::vector<bool> in_basis(cols_, false);
      for (auto b : basis_) in_basis[b] = true;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_ && !enter; ++j) {
        if (!allowed[j] || in_basis[j]) continue;
        Rational d = obj[j];
        for (std::size_t r = 0; r < t_.size(); ++r)
          if (t_[r][j] != 0) d -= obj[basis_[r]] * t_[r][j];
        if (d > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][*enter] <= 0) continue;
        Rational ratio = t_[r][cols_] / t_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational value(const std::vector<Rational>& obj) const {
    Rational v = 0;
    for (std::size_t r = 0; r < t_.size(); ++r) v += obj[basis_[r]] * t_[r][cols_];
    return v;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size(), n = lp.c.size();
  if (lp.rel.size() != m || lp.b.size() != m) throw std::invalid_argument("malformed linear program");
  // columns: structural | slack/surplus per inequality | artificial per row that needs one
  std::size_t slack = 0, artificial = 0;
  std::vector<Relation> rel = lp.rel;
  std::vector<bool> flip(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    if (lp.a[r].size() != n) throw std::invalid_argument("malformed linear program");
    if (lp.b[r] < 0) {
      flip[r] = true;
      if (rel[r] == Relation::le) rel[r] = Relation::ge;
      else if (rel[r] == Relation::ge) rel[r] = Relation::le;
    }
    if (rel[r] != Relation::eq) ++slack;
    if (rel[r] != Relation::le) ++artificial;
  }
  const std::size_t cols = n + slack + artificial;
  Tableau tab(m, cols);
  std::size_t s = n, art = n + slack;
  for (std::size_t r = 0; r < m; ++r) {
    const Rational sign = flip[r] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = sign * lp.a[r][j];
    tab.rhs(r) = sign * lp.b[r];
    if (rel[r] == Relation::le) {
      tab.at(r, s) = 1;
      tab.basis(r) = s++;
    } else {
      if (rel[r] == Relation::ge) tab.at(r, s++) = -1;
      tab.at(r, art) = 1;
      tab.basis(r) = art++;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificial) {
    std::vector<Rational> phase1(cols, 0);
    for (std::size_t j = n + slack; j < cols; ++j) phase1[j] = -1;
    tab.optimize(phase1, allowed);
    if (tab.value(phase1) < 0) return {LpStatus::infeasible, 0, {}};
    // drive artificials out of the basis; rows where that is impossible are redundant
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basis(r) < n + slack) {
        ++r;
        continue;
      }
      std::optional<std::size_t> c;
      for (std::size_t j = 0; j < n + slack && !c; ++j)
        if (tab.at(r, j) != 0) c = j;
      if (c) {
        tab.pivot(r, *c);
        ++r;
      } else {
        tab.drop_row(r);
      }
    }
    for (std::size_t j = n + slack; j < cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> obj(cols, 0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = lp.c[j];
  if (!tab.optimize(obj, allowed)) return {LpStatus::unbounded, 0, {}};
  LpSolution sol{LpStatus::optimal, tab.value(obj), std::vector<Rational>(n, 0)};
  for (std::size_t r = 0; r < tab.rows(); ++r)
    if (tab.basis(r) < n) sol.x[tab.basis(r)] = tab.rhs(r);
  return sol;
}

}  // namespace rdss
