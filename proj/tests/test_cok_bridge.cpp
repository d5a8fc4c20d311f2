#include <random>

#include "doctest.h"
#include "nfold/cok_bridge.hpp"
#include "nfold/error.hpp"
#include "nfold/json_io.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"
#include "oracles.hpp"

using namespace nfold;

namespace {

ModulePresentation cyclic(const Ring& R, int e) { return ModulePresentation(1, TwistedMatrix::scalar(R, 1, R.x_pow(e))); }

}  // namespace

TEST_CASE("rank-one monomial factorizations give chains of truncated polynomial rings") {
  for (int d = 1; d <= 4; ++d) {
    const Ring R(RingSpec{FieldSpec::rationals(), 0, [&] {
                            std::vector<Scalar> w(static_cast<std::size_t>(d) + 1, Field().zero());
                            w.back() = Field().one();
                            return w;
                          }()});
    for (const auto& a : oracle::compositions(d)) {
      const NFactorization x = oracle::monomial_object(R, a);
      REQUIRE(validate(x).valid);
      const ChainModule c = cok0(x);
      REQUIRE(c.length() == a.size() - 1);
      int partial = 0;
      for (std::size_t i = 0; i < c.length(); ++i) {
        partial += a[i];
        // Hand Smith data: Cok(x^{a_1 + ... + a_i}) = k[x]/(x^{partial}).
        CHECK(c.lin(i).dim() == static_cast<std::size_t>(partial));
        const auto inv = smith_form(c.module(i).relations).invariant_factors(R);
        REQUIRE(inv.size() == (partial > 0 ? 1u : 0u));
        CHECK(R.equal(inv[0], R.x_pow(partial)));
      }
      CHECK(chain_is_mono(c).mono);
      // The inclusion is multiplication by x^{a_{i+1}}: the generator goes to x^{a_{i+1}}.
      for (std::size_t i = 0; i + 1 < c.length(); ++i) {
        const KMatrix gen = c.lin(i).encode(TwistedMatrix::identity(R, 1));
        const KMatrix image = gen * c.linear(i);
        CHECK(image == c.lin(i + 1).encode(TwistedMatrix::scalar(R, 1, R.x_pow(a[i + 1]))));
      }
      const ChainModule expect(R, [&] {
        std::vector<ModulePresentation> m;
        int s = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) m.push_back(cyclic(R, s += a[i]));
        return m;
      }(), [&] {
        std::vector<TwistedMatrix> m;
        for (std::size_t i = 1; i + 1 < a.size(); ++i) m.push_back(TwistedMatrix::scalar(R, 1, R.x_pow(a[i])));
        return m;
      }());
      CHECK(chain_iso(c, expect).verdict == IsoVerdict::Isomorphic);
    }
  }
}

TEST_CASE("lift of k[x]/(x) into k[x]/(x^2) at omega = x^3") {
  const json j = read_json_file(std::string(NFOLD_DATA_DIR) + "/chain_q_x3.json");
  const Ring R = ring_from_json(j.at("ring"));
  const ChainModule c = chain_from_json(R, j.at("chain"));
  const NFactorization x = lift(c);
  CHECK(validate(x).valid);
  CHECK(x.ranks() == std::vector<std::size_t>{1, 1, 1});
  CHECK(chain_iso(cok0(x), c).verdict == IsoVerdict::Isomorphic);
  CHECK(in_mono_class(x));
}

TEST_CASE("the zero chain lifts to a stably zero factorization") {
  const Ring R = preset_ring("F5:x2");
  const ChainModule zero(R, {ModulePresentation(0, TwistedMatrix(R, 0, 0))}, {});
  const NFactorization x = lift(zero);
  CHECK(validate(x).valid);
  for (auto d : cok0(x).dims()) CHECK(d == 0);
}

TEST_CASE("chain verdicts: mono failures, invariant factors, skew lift") {
  const Ring R = preset_ring("Q:x3");
  const ChainModule zero_map(R, {cyclic(R, 1), cyclic(R, 2)}, {TwistedMatrix(R, 1, 1)});
  const MonoReport m = chain_is_mono(zero_map);
  CHECK_FALSE(m.mono);
  CHECK(m.failing_index == 1);
  const ChainModule a(R, {cyclic(R, 2)}, {}), b(R, {ModulePresentation(2, TwistedMatrix::scalar(R, 2, R.x_pow(1)))}, {});
  CHECK(chain_iso(a, b).verdict == IsoVerdict::NotIsomorphic);
  CHECK(chain_iso(a, a).verdict == IsoVerdict::Isomorphic);
  const Ring S = preset_ring("F4frob:x2");
  const ChainModule s(S, {ModulePresentation(1, TwistedMatrix::scalar(S, 1, S.x_pow(1)))}, {});
  CHECK_THROWS_AS(lift(s), Error);
}

TEST_CASE("Gamma data round trips and rejects corruption") {
  for (const auto& [name, spec] : ring_presets()) {
    const Ring R(spec);
    std::mt19937_64 rng(23);
    for (std::size_t n = 1; n <= 4; ++n) {
      const SeededObject x = random_seeded(R, rng, {n, 2, 3});
      const GammaModuleData g = phi(x.object);
      CHECK(check_gamma(g).ok);
      CHECK(psi(g) == x.object);
      const FactorMorphism f = random_morphism(x, x, rng);
      CHECK(psi(g, g, phi(f)) == f);
      if (n < 2) continue;
      GammaModuleData bad = g;
      bad.f(1, 2) = bad.f(1, 2).with_twist(1);
      CHECK_FALSE(check_gamma(bad).ok);
      CHECK_THROWS_AS(psi(bad), Error);
    }
  }
}

TEST_CASE("faithfulness report on omega times identity") {
  const Ring R = preset_ring("Q:x2");
  const NFactorization x = oracle::monomial_object(R, {1, 1});
  const FactorMorphism f = scale_morphism(identity_morphism(x), R.omega());
  const FaithfulnessReport r = faithfulness_check(f);
  CHECK(r.cok_zero);
  CHECK(r.through_theta0 == Verdict::Yes);
  CHECK(r.agree_zero());
  CHECK(r.agree_projective());
  const FaithfulnessReport id = faithfulness_check(identity_morphism(x));
  CHECK_FALSE(id.cok_zero);
  CHECK_FALSE(id.through_projective);
  CHECK(id.null_homotopic == Verdict::No);
}

TEST_CASE("Cok0 chains of random objects are torsion and mono") {
  for (const auto& [name, spec] : ring_presets()) {
    const Ring R(spec);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 6; ++t) {
      const NFactorization x = random_factorization(R, rng, {3, 2, 4});
      const ChainModule c = cok0(x);
      for (const auto& m : c.modules()) CHECK(m.is_omega_torsion());
      CHECK(chain_is_mono(c).mono);
    }
  }
}
