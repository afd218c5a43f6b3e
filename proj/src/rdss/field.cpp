#include "rdss/field.hpp"

namespace rdss {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Symbol field_inverse(Symbol a, unsigned q) {
  // a^(q-2) by square and multiply
  std::uint64_t result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<Symbol>(result);
}

void FieldMatrix::append_row(std::span<const Symbol> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(cols_, rows_, q_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<std::size_t> row_reduce(FieldMatrix& m) {
  const unsigned q = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(r, k));
    Symbol inv = field_inverse(m.at(r, c), q);
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(r, k) = static_cast<Symbol>(std::uint64_t{m.at(r, k)} * inv % q);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Symbol f = m.at(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k)
        m.at(i, k) = static_cast<Symbol>((m.at(i, k) + std::uint64_t{q - f} * m.at(r, k)) % q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FieldMatrix m) { return row_reduce(m).size(); }

FieldMatrix null_space(const FieldMatrix& m) {
  FieldMatrix r = m;
  auto pivots = row_reduce(r);
  const unsigned q = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  FieldMatrix basis(0, m.cols(), q);
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Symbol> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = static_cast<Symbol>((q - r.at(i, free)) % q);
    basis.append_row(v);
  }
  return basis;
}

std::optional<std::vector<Symbol>> solve(const FieldMatrix& a, std::span<const Symbol> b) {
  const unsigned q = a.field();
  FieldMatrix aug(a.rows(), a.cols() + 1, q);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r] % q;
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Symbol> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

}  // namespace rdss
