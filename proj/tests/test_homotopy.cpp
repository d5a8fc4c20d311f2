#include <random>

#include "doctest.h"
#include "nfold/homotopy.hpp"
#include "nfold/json_io.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"
#include "oracles.hpp"

using namespace nfold;

namespace {

FactorMorphism load_morphism(const std::string& file) {
  const json j = read_json_file(std::string(NFOLD_DATA_DIR) + "/" + file);
  return morphism_from_json(ring_from_json(j.at("ring")), j.at("morphism"));
}

}  // namespace

TEST_CASE("identity of (x, x) is not null-homotopic, x times it is") {
  const FactorMorphism id = load_morphism("id_xx_q_x2.json");
  const FactorMorphism xid = load_morphism("x_id_xx_q_x2.json");
  CHECK(is_p_null_homotopic(id).verdict == Verdict::No);
  const HomotopyResult r = is_p_null_homotopic(xid);
  REQUIRE(r.found());
  CHECK(reconstruct_from_witness(xid.source(), xid.target(), *r.witness) == xid);
  CHECK_FALSE(oracle::null_homotopic_mod_omega(id));
  CHECK(oracle::null_homotopic_mod_omega(xid));
}

TEST_CASE("stable End of (x, x) at omega = x^2 is one-dimensional") {
  CHECK(oracle::brute_force_stable_end_dim() == 1);
  for (const char* name : {"Q:x2", "F5:x2"}) {
    const Ring R = preset_ring(name);
    const NFactorization x(R, {TwistedMatrix::scalar(R, 1, R.x_pow(1)), TwistedMatrix::scalar(R, 1, R.x_pow(1), 1)});
    const StableHomReport s = stable_hom(x, x);
    CHECK(s.k_dimension == 1);
    CHECK(s.omega_torsion);
  }
}

TEST_CASE("library verdicts agree with the mod-omega oracle") {
  for (const auto& name : default_commutative_presets()) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(31);
    int pos = 0, neg = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 10; ++t) {
        const SeededObject x = random_seeded(R, rng, {n, 2, 4});
        const SeededObject y = t % 2 == 0 ? x : random_seeded(R, rng, {n, 2, 4});
        FactorMorphism f = random_null_homotopic(x.object, y.object, rng, 2);
        if (t % 3 != 0) f = f + random_morphism(x, y, rng);
        const bool expect = oracle::null_homotopic_mod_omega(f);
        const HomotopyResult h = is_p_null_homotopic(f);
        CHECK_MESSAGE(h.found() == expect, name);
        (expect ? pos : neg)++;
        if (h.found()) CHECK(reconstruct_from_witness(x.object, y.object, *h.witness) == f);
      }
    CHECK(pos > 0);
    CHECK(neg > 0);
  }
}

TEST_CASE("test-side reconstruction matches the library formula") {
  const Ring R = preset_ring("F5:x3");
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const NFactorization x = random_factorization(R, rng, {3, 2, 3}), y = random_factorization(R, rng, {3, 2, 3});
    const HomotopyWitness w = random_witness(x, y, rng, 2);
    std::vector<oracle::Mat> h;
    for (const auto& m : w.h) h.push_back(oracle::entries(m));
    const auto expect = oracle::reconstruct(x, y, h);
    const FactorMorphism f = reconstruct_from_witness(x, y, w);
    for (std::size_t i = 0; i < 3; ++i) CHECK(oracle::same(R, oracle::entries(f.component(i)), expect[i]));
  }
}

TEST_CASE("trivial factorizations are stably zero; ideal class sits inside null-homotopic maps") {
  for (const char* name : {"Q:x3", "F5:x2(x-1)", "F4frob:x2"}) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(12);
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t i = 0; i < n; ++i) {
        const NFactorization t = theta(R, n, i, 2);
        const HomotopyResult r = is_stably_zero(t);
        REQUIRE(r.found());
        CHECK(reconstruct_from_witness(t, t, *r.witness) == identity_morphism(t));
      }
    for (int t = 0; t < 10; ++t) {
      const SeededObject x = random_seeded(R, rng, {3, 2, 4});
      const FactorMorphism f = random_morphism(x, x, rng);
      const HomotopyResult ideal = factors_through_theta0(f);
      if (ideal.found()) CHECK(is_p_null_homotopic(f).verdict != Verdict::No);
    }
  }
}

TEST_CASE("skew witnesses from the bounded search re-verify") {
  for (const char* name : {"F4frob:x", "F4frob:x2"}) {
    const Ring R = preset_ring(name);
    std::mt19937_64 rng(19);
    int found = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (int t = 0; t < 8; ++t) {
        const SeededObject x = random_seeded(R, rng, {n, 2, 3}), y = random_seeded(R, rng, {n, 2, 3});
        const FactorMorphism f = random_null_homotopic(x.object, y.object, rng, 1);
        const HomotopyResult h = is_p_null_homotopic(f);
        CHECK(h.verdict != Verdict::No);
        if (h.found()) {
          ++found;
          CHECK(reconstruct_from_witness(x.object, y.object, *h.witness) == f);
        }
      }
    CHECK(found > 0);
  }
}
