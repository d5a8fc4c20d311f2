#include "nfold/semilinear.hpp"

#include <algorithm>

#include "nfold/error.hpp"
#include "nfold/module.hpp"

namespace nfold {

std::size_t LinearSystem::unknown_count() const {
  std::size_t c = 0;
  for (const auto& b : unknowns) c += b.rows * b.cols;
  return c;
}

MatrixTuple LinearSystem::zero_unknowns() const {
  MatrixTuple out;
  for (const auto& b : unknowns) out.emplace_back(ring, b.rows, b.cols, b.twist);
  return out;
}

MatrixTuple LinearSystem::basis_unknowns(std::size_t index, const Poly& c) const {
  MatrixTuple out = zero_unknowns();
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const std::size_t sz = unknowns[k].rows * unknowns[k].cols;
    if (index < sz) {
      out[k].at(index / unknowns[k].cols, index % unknowns[k].cols) = c;
      return out;
    }
    index -= sz;
  }
  fail(ErrorKind::IndexOutOfRange, "basis unknown index");
}

TwistedMatrix flatten(const Ring& ring, const MatrixTuple& m) {
  std::size_t n = 0;
  for (const auto& b : m) n += b.rows() * b.cols();
  TwistedMatrix row(ring, 1, n);
  std::size_t k = 0;
  for (const auto& b : m)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) row.at(0, k++) = b.at(i, j);
  return row;
}

MatrixTuple unflatten(const TwistedMatrix& row, const std::vector<UnknownBlock>& shapes) {
  MatrixTuple out;
  std::size_t k = 0;
  for (const auto& s : shapes) {
    TwistedMatrix b(row.ring(), s.rows, s.cols, s.twist);
    for (std::size_t i = 0; i < s.rows; ++i)
      for (std::size_t j = 0; j < s.cols; ++j) b.at(i, j) = row.at(0, k++);
    out.push_back(std::move(b));
  }
  require(k == row.cols(), ErrorKind::ShapeMismatch, "unflatten: length mismatch");
  return out;
}

std::vector<UnknownBlock> shapes_of(const MatrixTuple& m) {
  std::vector<UnknownBlock> s;
  for (const auto& b : m) s.push_back({b.rows(), b.cols(), b.twist()});
  return s;
}

bool tuples_equal(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

TwistedMatrix operator_matrix(const LinearSystem& sys) {
  const Ring& R = sys.ring;
  require(R.is_commutative(), ErrorKind::Unsupported, "operator_matrix requires a commutative ring");
  const std::size_t n = sys.unknown_count();
  std::vector<TwistedMatrix> rows;
  std::size_t width = 0;
  for (std::size_t k = 0; k < n; ++k) {
    TwistedMatrix r = flatten(R, sys.apply(sys.basis_unknowns(k, R.one())));
    width = r.cols();
    rows.push_back(std::move(r));
  }
  if (rows.empty()) {
    width = flatten(R, sys.apply(sys.zero_unknowns())).cols();
    return TwistedMatrix(R, 0, width);
  }
  return TwistedMatrix::vstack(rows);
}

std::optional<MatrixTuple> solve_exact(const LinearSystem& sys, const HermiteResult& hf, const MatrixTuple& target) {
  const TwistedMatrix t = flatten(sys.ring, target);
  if (hf.h.rows() == 0) {
    if (t.is_zero()) return sys.zero_unknowns();
    return std::nullopt;
  }
  auto res = solve_right(hf, t);
  if (!res.solvable()) return std::nullopt;
  return unflatten(*res.w, sys.unknowns);
}

std::optional<MatrixTuple> solve_exact(const LinearSystem& sys, const MatrixTuple& target) {
  const TwistedMatrix m = operator_matrix(sys);
  if (m.rows() == 0) {
    if (flatten(sys.ring, target).is_zero()) return sys.zero_unknowns();
    return std::nullopt;
  }
  return solve_exact(sys, hermite_form(m), target);
}

namespace {

// Prime-field coordinates of a flattened tuple, degree slots [0, deg_cap].
void append_coords(const Ring& R, const Field& base, const TwistedMatrix& row, int deg_cap, KMatrix& out,
                   std::size_t out_col_row) {
  const Field& F = R.field();
  const std::size_t e = base == F ? 1 : F.degree();
  const std::size_t slots = static_cast<std::size_t>(deg_cap) + 1;
  for (std::size_t j = 0; j < row.cols(); ++j) {
    const Poly& p = row.at(0, j);
    require(p.degree() <= deg_cap, ErrorKind::Precondition, "coordinate degree cap exceeded");
    for (std::size_t d = 0; d < p.c.size(); ++d) {
      if (e == 1) {
        out.at(out_col_row, (j * slots + d)) = p.c[d];
      } else {
        const auto dg = F.digits(p.c[d]);
        for (std::size_t b = 0; b < e; ++b) out.at(out_col_row, (j * slots + d) * e + b) = base.from_code(dg[b]);
      }
    }
  }
}

}  // namespace

std::optional<MatrixTuple> solve_bounded(const LinearSystem& sys, const MatrixTuple& target, int bound) {
  const Ring& R = sys.ring;
  const Field base = linearization_field(R);
  const Field& F = R.field();
  const std::size_t e = base == F ? 1 : F.degree();
  const std::size_t n = sys.unknown_count();
  // Images of every basis unknown u^b x^d E_k.
  std::vector<TwistedMatrix> images;
  std::vector<Poly> values;
  int deg_cap = std::max(0, flatten(R, target).max_degree());
  for (std::size_t k = 0; k < n; ++k)
    for (int d = 0; d <= bound; ++d)
      for (std::size_t b = 0; b < e; ++b) {
        Scalar c = F.one();
        if (e > 1) {
          std::vector<std::uint32_t> dg(e, 0);
          dg[b] = 1;
          c = F.from_digits(dg);
        }
        const Poly v = R.monomial(c, d);
        TwistedMatrix img = flatten(R, sys.apply(sys.basis_unknowns(k, v)));
        deg_cap = std::max(deg_cap, img.max_degree());
        images.push_back(std::move(img));
        values.push_back(v);
      }
  const TwistedMatrix t = flatten(R, target);
  const std::size_t width = t.cols() * (static_cast<std::size_t>(deg_cap) + 1) * e;
  // Columns of the system are the basis unknowns; solve M c = t.
  KMatrix rows(base, images.size(), width);
  for (std::size_t k = 0; k < images.size(); ++k) append_coords(R, base, images[k], deg_cap, rows, k);
  KMatrix tv(base, 1, width);
  append_coords(R, base, t, deg_cap, tv, 0);
  auto sol = solve(rows.transpose(), tv.transpose());
  if (!sol) return std::nullopt;
  // Assemble unknowns: each coordinate multiplies its basis value.
  TwistedMatrix flat(R, 1, n);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (int d = 0; d <= bound; ++d)
      for (std::size_t b = 0; b < e; ++b, ++idx) {
        const Scalar& a = sol->at(idx, 0);
        if (base.is_zero(a)) continue;
        // a lies in the prime field; embed it as a constant of F.
        const Scalar emb = e == 1 ? a : F.from_code(code_of(a));
        flat.at(0, k) = R.add(flat.at(0, k), R.scale(emb, values[idx]));
      }
  return unflatten(flat, sys.unknowns);
}

}  // namespace nfold
