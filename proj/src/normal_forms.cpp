#include "nfold/normal_forms.hpp"

#include "nfold/error.hpp"

namespace nfold {

namespace {

// row_i -= q * row_k on a matrix (left multiplication by q).
void row_submul(TwistedMatrix& m, std::size_t i, std::size_t k, const Poly& q) {
  const Ring& R = m.ring();
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.at(k, j).is_zero()) m.at(i, j) = R.sub(m.at(i, j), R.mul(q, m.at(k, j)));
}

void row_swap(TwistedMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_scale(TwistedMatrix& m, std::size_t i, const Scalar& c) {
  const Ring& R = m.ring();
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = R.scale(c, m.at(i, j));
}

// col_j -= col_k * q (commutative only).
void col_submul(TwistedMatrix& m, std::size_t j, std::size_t k, const Poly& q) {
  const Ring& R = m.ring();
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.at(i, k).is_zero()) m.at(i, j) = R.sub(m.at(i, j), R.mul(m.at(i, k), q));
}

void col_swap(TwistedMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

HermiteResult hermite_form(const TwistedMatrix& m) {
  require(m.twist() == 0, ErrorKind::Precondition, "hermite_form expects a twist-0 matrix");
  const Ring& R = m.ring();
  const Field& F = R.field();
  TwistedMatrix h = m;
  TwistedMatrix u = TwistedMatrix::identity(R, m.rows());
  Scalar det = F.one();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i) {
        const Poly& e = h.at(i, col);
        if (e.is_zero()) continue;
        if (best == h.rows() || e.degree() < h.at(best, col).degree()) best = i;
      }
      if (best == h.rows()) break;
      if (best != row) {
        row_swap(h, best, row);
        row_swap(u, best, row);
        det = F.neg(det);
      }
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h.at(i, col).is_zero()) continue;
        const Poly q = R.left_divmod(h.at(i, col), h.at(row, col)).first;
        row_submul(h, i, row, q);
        row_submul(u, i, row, q);
        if (!h.at(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (row >= h.rows() || h.at(row, col).is_zero()) continue;
    const Scalar c = R.monic_factor(h.at(row, col));
    row_scale(h, row, c);
    row_scale(u, row, c);
    det = F.mul(det, c);
    for (std::size_t i = 0; i < row; ++i) {
      if (h.at(i, col).is_zero()) continue;
      const Poly q = R.left_divmod(h.at(i, col), h.at(row, col)).first;
      if (q.is_zero()) continue;
      row_submul(h, i, row, q);
      row_submul(u, i, row, q);
    }
    pivots.push_back(col);
    ++row;
  }
  // det(u) * det(m) = det(h); we tracked det of the accumulated operations.
  return HermiteResult{std::move(h), std::move(u), std::move(pivots), det};
}

std::vector<Poly> SmithResult::invariant_factors(const Ring& ring) const {
  std::vector<Poly> out;
  for (const auto& d : diag)
    if (!d.is_zero() && !ring.is_unit(d)) out.push_back(d);
  return out;
}

SmithResult smith_form(const TwistedMatrix& m) {
  const Ring& R = m.ring();
  require(R.is_commutative(), ErrorKind::Unsupported, "smith_form requires a commutative ring");
  require(m.twist() == 0, ErrorKind::Precondition, "smith_form expects a twist-0 matrix");
  TwistedMatrix a = m;
  TwistedMatrix u = TwistedMatrix::identity(R, m.rows());
  TwistedMatrix v = TwistedMatrix::identity(R, m.cols());
  const std::size_t r = m.rows(), c = m.cols(), k = std::min(r, c);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest-degree nonzero entry of the trailing block.
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Poly& e = a.at(i, j);
          if (e.is_zero()) continue;
          if (bi == r || e.degree() < a.at(bi, bj).degree()) bi = i, bj = j;
        }
      if (bi == r) break;
      if (bi != t) row_swap(a, bi, t), row_swap(u, bi, t);
      if (bj != t) col_swap(a, bj, t), col_swap(v, bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t).is_zero()) continue;
        const Poly q = R.left_divmod(a.at(i, t), a.at(t, t)).first;
        row_submul(a, i, t, q);
        row_submul(u, i, t, q);
        if (!a.at(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j).is_zero()) continue;
        const Poly q = R.left_divmod(a.at(t, j), a.at(t, t)).first;
        col_submul(a, j, t, q);
        col_submul(v, j, t, q);
        if (!a.at(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in a row whose entries the pivot does not divide.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!R.left_divmod(a.at(i, j), a.at(t, t)).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_submul(a, t, bad, R.constant(R.field().from_int(-1)));
      row_submul(u, t, bad, R.constant(R.field().from_int(-1)));
    }
    if (a.at(t, t).is_zero()) break;
    const Scalar s = R.monic_factor(a.at(t, t));
    row_scale(a, t, s);
    row_scale(u, t, s);
  }
  SmithResult res{a, u, v, {}};
  for (std::size_t t = 0; t < k; ++t) res.diag.push_back(a.at(t, t));
  return res;
}

SolveResult solve_right(const HermiteResult& hf, const TwistedMatrix& target) {
  const TwistedMatrix& h = hf.h;
  const Ring& R = h.ring();
  require(target.cols() == h.cols(), ErrorKind::ShapeMismatch, "solve_right: target width differs");
  require(target.twist() == 0, ErrorKind::Precondition, "solve_right expects a twist-0 target");
  TwistedMatrix z(R, target.rows(), h.rows());
  for (std::size_t t = 0; t < target.rows(); ++t) {
    TwistedMatrix res = target.row(t);
    std::size_t next_pivot = 0;
    bool ok = true;
    for (std::size_t col = 0; col < h.cols() && ok; ++col) {
      const bool is_pivot = next_pivot < hf.pivots.size() && hf.pivots[next_pivot] == col;
      if (!is_pivot) {
        if (!res.at(0, col).is_zero()) ok = false;
        continue;
      }
      const std::size_t k = next_pivot++;
      if (res.at(0, col).is_zero()) continue;
      auto [q, rem] = R.left_divmod(res.at(0, col), h.at(k, col));
      if (!rem.is_zero()) {
        ok = false;
        continue;
      }
      z.at(t, k) = q;
      for (std::size_t j = col; j < h.cols(); ++j)
        if (!h.at(k, j).is_zero()) res.at(0, j) = R.sub(res.at(0, j), R.mul(q, h.at(k, j)));
    }
    if (!ok) {
      SolveResult out;
      out.failing_row = t;
      out.residual = res;
      return out;
    }
  }
  SolveResult out;
  out.w = z.product(hf.u);
  return out;
}

SolveResult solve_right(const TwistedMatrix& m, const TwistedMatrix& target) {
  return solve_right(hermite_form(m), target);
}

TwistedMatrix left_kernel(const HermiteResult& hf) {
  const std::size_t r = hf.h.rows(), rk = hf.rank();
  if (rk == r) return TwistedMatrix(hf.h.ring(), 0, r);
  return hf.u.block(rk, 0, r - rk, r);
}

TwistedMatrix left_kernel(const TwistedMatrix& m) { return left_kernel(hermite_form(m)); }

}  // namespace nfold
