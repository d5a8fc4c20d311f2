#include <random>

#include "doctest.h"
#include "nfold/error.hpp"
#include "nfold/normal_forms.hpp"
#include "nfold/presets.hpp"
#include "oracles.hpp"

using namespace nfold;

namespace {

Poly P(const Ring& R, std::vector<long> c) { return R.from_ints(c); }

TwistedMatrix mat(const Ring& R, std::vector<std::vector<std::vector<long>>> e) {
  return TwistedMatrix::from_ints(R, e);
}

// Determinant of a square matrix by cofactor expansion (commutative rings).
Poly det(const Ring& R, const TwistedMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return R.one();
  if (n == 1) return m.at(0, 0);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    TwistedMatrix minor(R, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, k++) = m.at(r, c);
    const Poly t = R.mul(m.at(0, j), det(R, minor));
    acc = j % 2 == 0 ? R.add(acc, t) : R.sub(acc, t);
  }
  return acc;
}

}  // namespace

TEST_CASE("skew multiplication follows x c = phi(c) x") {
  const Ring R = preset_ring("F4frob:x2");
  const Field& F = R.field();
  for (std::uint32_t a = 0; a < 4; ++a) {
    const Scalar c = F.from_code(a);
    CHECK(R.equal(R.mul(R.x_pow(1), R.constant(c)), R.monomial(F.frobenius(c, 1), 1)));
    CHECK(R.equal(R.mul(R.x_pow(2), R.constant(c)), R.monomial(c, 2)));
  }
  CHECK_FALSE(R.is_commutative());
  const Ring Rx = preset_ring("F4frob:x");
  CHECK(code_of(Rx.apply_sigma(Rx.constant(F.from_code(2)), 1).c[0]) == 3);
}

TEST_CASE("a non-normal omega is rejected") {
  const Field F4(FieldSpec::extension(2, 2, {1, 1, 1}));
  CHECK_THROWS_AS(Ring(F4, 1, {F4.one(), F4.one()}), Error);
  CHECK_THROWS_AS(Ring(Field(), 0, {}), Error);
}

TEST_CASE("multiplication is associative and left division leaves a short remainder") {
  for (const auto& [name, spec] : ring_presets()) {
    const Ring R(spec);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
      const Poly a = R.random(rng, 5), b = R.random(rng, 3), c = R.random(rng, 2);
      CHECK(R.equal(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))));
      if (b.is_zero()) continue;
      const auto [q, r] = R.left_divmod(a, b);
      CHECK(R.equal(R.add(R.mul(q, b), r), a));
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("Smith form matches hand-computed invariant factors") {
  const Ring R = preset_ring("Q:x4");
  struct Case {
    TwistedMatrix m;
    std::vector<Poly> diag;
  };
  const std::vector<Case> cases{
      {mat(R, {{{0, 1}, {}}, {{}, {0, 0, 1}}}), {P(R, {0, 1}), P(R, {0, 0, 1})}},
      {mat(R, {{{0, 0, 1}, {}}, {{}, {0, 1}}}), {P(R, {0, 1}), P(R, {0, 0, 1})}},
      {mat(R, {{{0, 0, 1}, {0, 1}}, {{0, 1}, {0, 0, 1}}}), {P(R, {0, 1}), P(R, {0, -1, 0, 1})}},
      {mat(R, {{{1, 1}, {}}, {{}, {-1, 1}}}), {P(R, {1}), P(R, {-1, 0, 1})}},
      {mat(R, {{{2}, {0, 4}}, {{0, 6}, {0, 0, 8}}}), {P(R, {1}), P(R, {0, 0, 1})}},
  };
  for (const auto& c : cases) {
    const SmithResult s = smith_form(c.m);
    REQUIRE(s.diag.size() == c.diag.size());
    for (std::size_t i = 0; i < c.diag.size(); ++i) CHECK(R.equal(s.diag[i], c.diag[i]));
    CHECK(s.u.product(c.m).product(s.v) == s.s);
    CHECK(det(R, s.u).degree() == 0);
    CHECK(det(R, s.v).degree() == 0);
  }
}

TEST_CASE("Smith and Hermite transforms on random matrices") {
  for (const char* name : {"Q:x3", "F5:x2(x-1)"}) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      TwistedMatrix m(R, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = R.random(rng, 3);
      const SmithResult s = smith_form(m);
      CHECK(s.u.product(m).product(s.v) == s.s);
      for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
        if (!s.diag[i + 1].is_zero()) CHECK(R.left_divmod(s.diag[i + 1], s.diag[i]).second.is_zero());
      const HermiteResult h = hermite_form(m);
      CHECK(h.u.product(m) == h.h);
      CHECK(det(R, h.u).degree() == 0);
    }
  }
}

TEST_CASE("solve_right agrees with the adjugate formula") {
  for (const char* name : {"Q:x2", "F5:x3"}) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(13);
    int solvable = 0;
    for (int t = 0; t < 60; ++t) {
      TwistedMatrix m(R, 2, 2), target(R, 1, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = R.random(rng, 2);
      const Poly d = det(R, m);
      if (d.is_zero()) continue;
      TwistedMatrix w0(R, 1, 2);
      w0.at(0, 0) = R.random(rng, 2);
      w0.at(0, 1) = R.random(rng, 2);
      target = t % 2 == 0 ? w0.product(m) : w0;
      // w = t adj(m) / det(m) exists iff det divides both entries of t adj(m).
      TwistedMatrix adj(R, 2, 2);
      adj.at(0, 0) = m.at(1, 1);
      adj.at(0, 1) = R.neg(m.at(0, 1));
      adj.at(1, 0) = R.neg(m.at(1, 0));
      adj.at(1, 1) = m.at(0, 0);
      const TwistedMatrix ta = target.product(adj);
      const bool expect = R.left_divmod(ta.at(0, 0), d).second.is_zero() && R.left_divmod(ta.at(0, 1), d).second.is_zero();
      const SolveResult s = solve_right(m, target);
      CHECK(s.solvable() == expect);
      if (s.solvable()) {
        CHECK(s.w->product(m) == target);
        ++solvable;
      }
    }
    CHECK(solvable > 0);
  }
}

TEST_CASE("left kernel rows annihilate and have the right count") {
  const Ring R = preset_ring("F5:x4");
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    TwistedMatrix m(R, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = R.random(rng, 2);
    const TwistedMatrix k = left_kernel(m);
    CHECK(k.product(m).is_zero());
    CHECK(k.rows() + hermite_form(m).rank() == 3);
  }
}
