#pragma once
// Test-side oracles. They share only the field and polynomial arithmetic with
// the library; the decision procedures are written independently.

#include <cstddef>
#include <utility>
#include <vector>

#include "nfold/factorization.hpp"

namespace oracle {

using nfold::Field;
using nfold::Poly;
using nfold::Ring;
using nfold::Scalar;
using Row = std::vector<Scalar>;

// Plain Gaussian elimination.
inline std::size_t rank(const Field& F, std::vector<Row> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && F.is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = F.inv(rows[r][c]);
    for (auto& v : rows[r]) v = F.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || F.is_zero(rows[i][c])) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

inline bool in_span(const Field& F, const std::vector<Row>& rows, const Row& v) {
  std::vector<Row> ext = rows;
  ext.push_back(v);
  return rank(F, rows) == rank(F, ext);
}

using Mat = std::vector<std::vector<Poly>>;

inline Mat entries(const nfold::TwistedMatrix& m) {
  Mat out(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

inline bool same(const Ring& R, const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!R.equal(a[i][j], b[i][j])) return false;
  }
  return true;
}

inline Mat identity(const Ring& R, std::size_t n) {
  Mat out(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = R.one();
  return out;
}

inline Mat mul(const Ring& R, const Mat& a, const Mat& b, std::size_t inner, std::size_t cols) {
  Mat out(a.size(), std::vector<Poly>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] = R.add(out[i][j], R.mul(a[i][k], b[k][j]));
  return out;
}

// Commutative rings only: d^i d^{i+1} ... along `len` maps starting at i.
inline Mat path(const nfold::NFactorization& x, std::size_t i, std::size_t len) {
  const Ring& R = x.ring();
  const std::size_t n = x.n();
  Mat acc = identity(R, x.rank(i % n));
  for (std::size_t s = 0; s < len; ++s) {
    const std::size_t k = (i + s) % n;
    acc = mul(R, acc, entries(x.map(k)), x.rank(k), x.rank((k + 1) % n));
  }
  return acc;
}

// Component i of the map built from homotopy blocks h^j : X^j -> Y^{j+1}:
// sum over j of path_X(i -> j) h^j path_Y(j+1 -> i), n-1 maps in total.
inline std::vector<Mat> reconstruct(const nfold::NFactorization& x, const nfold::NFactorization& y,
                                    const std::vector<Mat>& h) {
  const Ring& R = x.ring();
  const std::size_t n = x.n();
  std::vector<Mat> f;
  for (std::size_t i = 0; i < n; ++i) {
    Mat acc(x.rank(i), std::vector<Poly>(y.rank(i)));
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t lx = (j + n - i) % n, ly = n - 1 - lx;
      Mat t = mul(R, path(x, i, lx), h[j], x.rank(j), y.rank((j + 1) % n));
      t = mul(R, t, path(y, (j + 1) % n, ly), y.rank((j + 1) % n), y.rank(i));
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < acc[a].size(); ++b) acc[a][b] = R.add(acc[a][b], t[a][b]);
    }
    f.push_back(std::move(acc));
  }
  return f;
}

inline void append_reduced(const Ring& R, const Poly& p, Row& out) {
  const Poly r = R.quotient_reduce(p);
  for (int a = 0; a < R.omega_degree(); ++a)
    out.push_back(static_cast<std::size_t>(a) < r.c.size() ? r.c[a] : R.field().zero());
}

// Over a commutative ring omega * Hom(X, Y) consists of null-homotopic maps,
// so f is null-homotopic iff f agrees modulo omega with the reconstruction of
// some witness whose entries have degree < deg(omega). That is a finite
// k-linear span question.
inline bool null_homotopic_mod_omega(const nfold::FactorMorphism& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  const Ring& R = x.ring();
  const std::size_t n = x.n();
  auto flatten = [&](const std::vector<Mat>& comps) {
    Row row;
    for (const auto& m : comps)
      for (const auto& r : m)
        for (const auto& p : r) append_reduced(R, p, row);
    return row;
  };
  std::vector<Row> span;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < x.rank(j); ++a)
      for (std::size_t b = 0; b < y.rank((j + 1) % n); ++b)
        for (int p = 0; p < R.omega_degree(); ++p) {
          std::vector<Mat> h;
          for (std::size_t t = 0; t < n; ++t) h.emplace_back(x.rank(t), std::vector<Poly>(y.rank((t + 1) % n)));
          h[j][a][b] = R.x_pow(p);
          span.push_back(flatten(reconstruct(x, y, h)));
        }
  std::vector<Mat> target;
  for (const auto& c : f.components()) target.push_back(entries(c));
  const Row t = flatten(target);
  if (span.empty()) {
    for (const auto& v : t)
      if (!R.field().is_zero(v)) return false;
    return true;
  }
  return in_span(R.field(), span, t);
}

// Rank-one factorization (x^{a_0}, ..., x^{a_{n-1}}).
inline nfold::NFactorization monomial_object(const Ring& R, const std::vector<int>& a) {
  std::vector<nfold::TwistedMatrix> maps;
  for (std::size_t i = 0; i < a.size(); ++i)
    maps.push_back(nfold::TwistedMatrix::scalar(R, 1, R.x_pow(a[i]), i + 1 == a.size() ? 1 : 0));
  return nfold::NFactorization(R, maps);
}

// All compositions of d into positive parts.
inline void compositions(int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (d == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int a = 1; a <= d; ++a) {
    cur.push_back(a);
    compositions(d - a, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(d, cur, out);
  return out;
}

// Stable endomorphisms of the Abar-module k = F_5[x]/(x) over Abar =
// F_5[x]/(x^2) by enumeration: all Abar-maps k -> k modulo the span of maps
// factoring through the free module Abar. Returns the dimension over F_5.
inline int brute_force_stable_end_dim() {
  const int p = 5;
  using E = std::pair<int, int>;  // c0 + c1 x in Abar
  auto times_x = [](E v) { return E{0, v.first}; };
  // An Abar-map from k is fixed by the image of 1, which x must kill.
  std::vector<E> into_free;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (times_x({a, b}) == E{0, 0}) into_free.push_back({a, b});
  // An Abar-map Abar -> k sends c0 + c1 x to c0 * t, since x acts by 0 on k.
  std::vector<bool> reached(p, false);
  reached[0] = true;
  for (const E& v : into_free)
    for (int t = 0; t < p; ++t) reached[(v.first * t) % p] = true;
  int sub = 0;
  for (bool r : reached) sub += r;
  // Every c in F_5 gives a map k -> k; the reached values already form a subspace.
  int dim = 0;
  for (int q = p / sub; q > 1; q /= p) ++dim;
  return dim;
}

}  // namespace oracle
