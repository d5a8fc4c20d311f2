#pragma once
// Dense matrices over a coefficient field and the exact linear algebra used
// by k-linearizations, intertwiner spaces and the bounded skew solver.

#include <cstddef>
#include <optional>
#include <vector>

#include "nfold/field.hpp"

namespace nfold {

class KMatrix {
 public:
  KMatrix(Field field, std::size_t rows, std::size_t cols);

  static KMatrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  KMatrix operator*(const KMatrix& o) const;
  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix scaled(const Scalar& c) const;
  KMatrix transpose() const;
  bool operator==(const KMatrix& o) const;
  bool is_zero() const;

  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  KMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const KMatrix& b);
  static KMatrix vstack(const KMatrix& a, const KMatrix& b);
  static KMatrix hstack(const KMatrix& a, const KMatrix& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref(KMatrix& m);

std::size_t rank(const KMatrix& m);

// Basis of {v : m v = 0}, one basis vector per row of the result.
KMatrix right_kernel(const KMatrix& m);
// Basis of {w : w m = 0}, one basis vector per row.
KMatrix left_kernel(const KMatrix& m);

// Some x with m x = b (b is a column matrix), or nullopt.
std::optional<KMatrix> solve(const KMatrix& m, const KMatrix& b);

std::optional<KMatrix> inverse(const KMatrix& m);
Scalar determinant(const KMatrix& m);

}  // namespace nfold
