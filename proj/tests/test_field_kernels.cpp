#include <cstdlib>
#include <string>
#include <random>

#include "doctest.h"
#include "nfold/error.hpp"
#include "nfold/field.hpp"
#include "nfold/kernels.hpp"

using namespace nfold;

TEST_CASE("F_4 multiplication matches the hand table for u^2 = u + 1") {
  const Field F(FieldSpec::extension(2, 2, {1, 1, 1}));
  // Codes: 0, 1, u = 2, u + 1 = 3.
  const std::uint32_t table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(code_of(F.mul(F.from_code(a), F.from_code(b))) == table[a][b]);
  for (std::uint32_t a = 0; a < 4; ++a) {
    CHECK(code_of(F.add(F.from_code(a), F.from_code(a))) == 0);
    CHECK(code_of(F.frobenius(F.from_code(a), 1)) == table[a][a]);
  }
}

TEST_CASE("prime field inverses agree with exhaustive search") {
  for (std::uint32_t p : {2u, 5u, 7u, 101u}) {
    const Field F(FieldSpec::prime(p));
    for (std::uint32_t a = 1; a < p; ++a) {
      std::uint32_t brute = 0;
      for (std::uint32_t b = 1; b < p; ++b)
        if (a * b % p == 1) brute = b;
      CHECK(code_of(F.inv(F.from_code(a))) == brute);
    }
    CHECK_THROWS_AS(F.inv(F.zero()), Error);
  }
}

TEST_CASE("rational arithmetic stays canonical") {
  const Field Q;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = Q.random(rng), b = Q.random(rng);
    const mpq_class& q = std::get<mpq_class>(a);
    mpq_class c = q;
    c.canonicalize();
    CHECK(c == q);
    CHECK(Q.equal(Q.sub(Q.add(a, b), b), a));
    if (!Q.is_zero(b)) CHECK(Q.equal(Q.mul(Q.div(a, b), b), a));
  }
}

namespace {

void naive_axpy(std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& s, std::uint32_t f,
                std::uint32_t p) {
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{f} * s[i]) % p);
}

}  // namespace

TEST_CASE("scalar and AVX2 row kernels agree with the naive loop") {
  std::mt19937_64 rng(11);
  const kernels::KernelTable* simd = kernels::avx2_table();
  if (!simd) MESSAGE("AVX2 kernels unavailable; checking the scalar reference only");
  for (std::uint32_t p : {2u, 3u, 5u, 251u, 32749u, kernels::kMaxModulus}) {
    for (std::size_t len : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 67u, 200u}) {
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      std::vector<std::uint32_t> dst(len), src(len);
      for (auto& v : dst) v = d(rng);
      for (auto& v : src) v = d(rng);
      const std::uint32_t f = d(rng);
      auto expect = dst;
      naive_axpy(expect, src, f, p);
      auto a = dst;
      kernels::scalar::axpy(a, src, f, p);
      CHECK(a == expect);
      auto sc = src;
      kernels::scalar::scale(sc, f, p);
      for (std::size_t i = 0; i < len; ++i) CHECK(sc[i] == std::uint64_t{f} * src[i] % p);
      if (simd) {
        auto b = dst;
        simd->axpy(b, src, f, p);
        CHECK(b == expect);
        auto sv = src;
        simd->scale(sv, f, p);
        CHECK(sv == sc);
      }
    }
  }
}

TEST_CASE("forcing the scalar path selects the reference table") {
  const char* forced = std::getenv("NFOLD_FORCE_SCALAR");
  if (forced && std::string(forced) != "0") CHECK(&kernels::active() == &kernels::scalar_table());
  else if (kernels::avx2_table()) CHECK(&kernels::active() == kernels::avx2_table());
  else CHECK(&kernels::active() == &kernels::scalar_table());
}
