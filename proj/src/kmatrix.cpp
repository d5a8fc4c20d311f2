#include "nfold/kmatrix.hpp"

#include <utility>

#include "nfold/error.hpp"
#include "nfold/kernels.hpp"

namespace nfold {

KMatrix::KMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

KMatrix KMatrix::identity(const Field& field, std::size_t n) {
  KMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  require(cols_ == o.rows_, ErrorKind::ShapeMismatch, "k-matrix product");
  KMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!field_.is_zero(o.at(k, j))) r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
    }
  return r;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "k-matrix sum");
  KMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "k-matrix difference");
  KMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

KMatrix KMatrix::scaled(const Scalar& c) const {
  KMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(c, data_[i]);
  return r;
}

KMatrix KMatrix::transpose() const {
  KMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool KMatrix::operator==(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!field_.equal(data_[i], o.data_[i])) return false;
  return true;
}

bool KMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!field_.is_zero(v)) return false;
  return true;
}

KMatrix KMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::IndexOutOfRange, "k-matrix block");
  KMatrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void KMatrix::set_block(std::size_t r0, std::size_t c0, const KMatrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::IndexOutOfRange, "k-matrix set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

KMatrix KMatrix::vstack(const KMatrix& a, const KMatrix& b) {
  require(a.cols_ == b.cols_, ErrorKind::ShapeMismatch, "k-matrix vstack");
  KMatrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

KMatrix KMatrix::hstack(const KMatrix& a, const KMatrix& b) {
  require(a.rows_ == b.rows_, ErrorKind::ShapeMismatch, "k-matrix hstack");
  KMatrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

namespace {

// Gauss-Jordan over F_p on packed residues, using the dispatched row kernels.
std::vector<std::size_t> rref_prime(KMatrix& m) {
  const std::uint32_t p = m.field().characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint32_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = code_of(m.at(i, j));
  auto row = [&](std::size_t i) { return std::span<std::uint32_t>(a.data() + i * C, C); };
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    const std::uint32_t inv = code_of(f.inv(Scalar(a[r * C + c])));
    kernels::scale_mod(row(r), inv, p);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const std::uint32_t v = a[i * C + c];
      if (v != 0) kernels::axpy_mod(row(i), row(r), p - v, p);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m.at(i, j) = a[i * C + j];
  return pivots;
}

std::vector<std::size_t> rref_generic(KMatrix& m) {
  const Field& f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Scalar inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < C; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const Scalar v = m.at(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!f.is_zero(m.at(r, j))) m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(KMatrix& m) {
  if (m.field().is_prime()) return rref_prime(m);
  return rref_generic(m);
}

std::size_t rank(const KMatrix& m) {
  KMatrix c = m;
  return rref(c).size();
}

KMatrix right_kernel(const KMatrix& m) {
  KMatrix e = m;
  const auto pivots = rref(e);
  const Field& f = m.field();
  const std::size_t C = m.cols();
  std::vector<char> is_pivot(C, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  KMatrix basis(f, C - pivots.size(), C);
  std::size_t k = 0;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    basis.at(k, free) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(k, pivots[r]) = f.neg(e.at(r, free));
    ++k;
  }
  return basis;
}

KMatrix left_kernel(const KMatrix& m) { return right_kernel(m.transpose()); }

std::optional<KMatrix> solve(const KMatrix& m, const KMatrix& b) {
  require(b.rows() == m.rows() && b.cols() == 1, ErrorKind::ShapeMismatch, "k-solve right-hand side");
  KMatrix aug = KMatrix::hstack(m, b);
  const auto pivots = rref(aug);
  const Field& f = m.field();
  KMatrix x(f, m.cols(), 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x.at(pivots[r], 0) = aug.at(r, m.cols());
  }
  return x;
}

std::optional<KMatrix> inverse(const KMatrix& m) {
  require(m.rows() == m.cols(), ErrorKind::ShapeMismatch, "inverse of non-square k-matrix");
  const std::size_t n = m.rows();
  KMatrix aug = KMatrix::hstack(m, KMatrix::identity(m.field(), n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  return aug.block(0, n, n, n);
}

Scalar determinant(const KMatrix& m) {
  require(m.rows() == m.cols(), ErrorKind::ShapeMismatch, "determinant of non-square k-matrix");
  const Field& f = m.field();
  KMatrix a = m;
  const std::size_t n = m.rows();
  Scalar det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(a.at(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(c, c));
    const Scalar inv = f.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(a.at(i, c))) continue;
      const Scalar v = f.mul(a.at(i, c), inv);
      for (std::size_t j = c; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(v, a.at(c, j)));
    }
  }
  return det;
}

}  // namespace nfold
