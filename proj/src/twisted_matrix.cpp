#include "nfold/twisted_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "nfold/error.hpp"

namespace nfold {

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  require(a.same_as(b), ErrorKind::IncompatibleRing, where);
}

TwistedMatrix::TwistedMatrix(Ring ring, std::size_t rows, std::size_t cols, long twist)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), twist_(twist), entries_(rows * cols) {}

TwistedMatrix TwistedMatrix::identity(const Ring& ring, std::size_t n, long twist) {
  return scalar(ring, n, ring.one(), twist);
}

TwistedMatrix TwistedMatrix::scalar(const Ring& ring, std::size_t n, const Poly& c, long twist) {
  TwistedMatrix m(ring, n, n, twist);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

TwistedMatrix TwistedMatrix::omega_map(const Ring& ring, std::size_t n) {
  return scalar(ring, n, ring.omega(), 1);
}

TwistedMatrix TwistedMatrix::from_ints(const Ring& ring, const std::vector<std::vector<std::vector<long>>>& e,
                                       long twist) {
  const std::size_t r = e.size(), c = r == 0 ? 0 : e[0].size();
  TwistedMatrix m(ring, r, c, twist);
  for (std::size_t i = 0; i < r; ++i) {
    require(e[i].size() == c, ErrorKind::ShapeMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = ring.from_ints(e[i][j]);
  }
  return m;
}

TwistedMatrix TwistedMatrix::with_twist(long t) const {
  TwistedMatrix m = *this;
  m.twist_ = t;
  return m;
}

bool TwistedMatrix::same_entries(const TwistedMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!ring_.equal(entries_[k], o.entries_[k])) return false;
  return true;
}

bool TwistedMatrix::operator==(const TwistedMatrix& o) const { return twist_ == o.twist_ && same_entries(o); }

bool TwistedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

int TwistedMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

TwistedMatrix TwistedMatrix::operator+(const TwistedMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix sum");
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "matrix sum shapes");
  require(twist_ == o.twist_, ErrorKind::ShapeMismatch, "matrix sum twists differ");
  TwistedMatrix r(ring_, rows_, cols_, twist_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = ring_.add(entries_[k], o.entries_[k]);
  return r;
}

TwistedMatrix TwistedMatrix::operator-(const TwistedMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix difference");
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "matrix difference shapes");
  require(twist_ == o.twist_, ErrorKind::ShapeMismatch, "matrix difference twists differ");
  TwistedMatrix r(ring_, rows_, cols_, twist_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = ring_.sub(entries_[k], o.entries_[k]);
  return r;
}

TwistedMatrix TwistedMatrix::operator-() const {
  TwistedMatrix r(ring_, rows_, cols_, twist_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = ring_.neg(entries_[k]);
  return r;
}

TwistedMatrix TwistedMatrix::product(const TwistedMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix product");
  require(cols_ == o.rows_, ErrorKind::ShapeMismatch,
          "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
              std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  TwistedMatrix r(ring_, rows_, o.cols_, twist_ + o.twist_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(a, b));
      }
    }
  return r;
}

TwistedMatrix TwistedMatrix::left_scale(const Poly& c) const {
  TwistedMatrix r(ring_, rows_, cols_, twist_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = ring_.mul(c, entries_[k]);
  return r;
}

TwistedMatrix TwistedMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::IndexOutOfRange, "matrix block");
  TwistedMatrix r(ring_, nr, nc, twist_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void TwistedMatrix::set_block(std::size_t r0, std::size_t c0, const TwistedMatrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::IndexOutOfRange, "matrix set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

TwistedMatrix TwistedMatrix::vstack(const std::vector<TwistedMatrix>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    require(p.cols_ == parts[0].cols_, ErrorKind::ShapeMismatch, "vstack column counts");
    rows += p.rows_;
  }
  TwistedMatrix r(parts[0].ring_, rows, parts[0].cols_, parts[0].twist_);
  std::size_t at_row = 0;
  for (const auto& p : parts) {
    r.set_block(at_row, 0, p);
    at_row += p.rows_;
  }
  return r;
}

TwistedMatrix TwistedMatrix::hstack(const std::vector<TwistedMatrix>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require(p.rows_ == parts[0].rows_, ErrorKind::ShapeMismatch, "hstack row counts");
    cols += p.cols_;
  }
  TwistedMatrix r(parts[0].ring_, parts[0].rows_, cols, parts[0].twist_);
  std::size_t at_col = 0;
  for (const auto& p : parts) {
    r.set_block(0, at_col, p);
    at_col += p.cols_;
  }
  return r;
}

TwistedMatrix TwistedMatrix::block_diag(const TwistedMatrix& a, const TwistedMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "block_diag");
  require(a.twist_ == b.twist_, ErrorKind::ShapeMismatch, "block_diag twists differ");
  TwistedMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_, a.twist_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, a.cols_, b);
  return r;
}

std::string TwistedMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << ring_.to_string(at(i, j));
  }
  os << "] (twist " << twist_ << ")";
  return os.str();
}

TwistedMatrix twist_matrix(const TwistedMatrix& f, long power) {
  if (power == 0 || f.ring().is_commutative()) return f;
  TwistedMatrix r(f.ring(), f.rows(), f.cols(), f.twist());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) r.at(i, j) = f.ring().apply_sigma(f.at(i, j), power);
  return r;
}

TwistedMatrix twisted_compose(const TwistedMatrix& f, const TwistedMatrix& g) {
  require(f.cols() == g.rows(), ErrorKind::ShapeMismatch,
          "twisted_compose: " + std::to_string(f.cols()) + " columns vs " + std::to_string(g.rows()) + " rows");
  return twist_matrix(f, g.twist()).product(g);
}

TwistedMatrix twisted_compose_all(const Ring& ring, const std::vector<TwistedMatrix>& seq, std::size_t n) {
  if (seq.empty()) return TwistedMatrix::identity(ring, n);
  TwistedMatrix acc = seq.front();
  for (std::size_t k = 1; k < seq.size(); ++k) acc = twisted_compose(acc, seq[k]);
  return acc;
}

}  // namespace nfold
