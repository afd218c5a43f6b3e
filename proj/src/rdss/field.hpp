#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rdss/common.hpp"

namespace rdss {

bool is_prime(unsigned q);
/// Multiplicative inverse in F_q, q prime, a != 0.
Symbol field_inverse(Symbol a, unsigned q);

/// Dense matrix over the prime field F_q.
class FieldMatrix {
public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, unsigned q) : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned field() const { return q_; }
  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Symbol> r);
  FieldMatrix transposed() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned q_ = 2;
  std::vector<Symbol> data_;
};

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m);
std::size_t rank(FieldMatrix m);
/// Rows form a basis of {x : M x = 0}.
FieldMatrix null_space(const FieldMatrix& m);
/// Some x with A x = b, or nullopt.
std::optional<std::vector<Symbol>> solve(const FieldMatrix& a, std::span<const Symbol> b);

}  // namespace rdss
