#include <random>

#include "doctest.h"
#include "nfold/error.hpp"
#include "nfold/functors.hpp"
#include "nfold/homotopy.hpp"
#include "nfold/json_io.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"
#include "oracles.hpp"

using namespace nfold;

namespace {

NFactorization load_object(const std::string& file) {
  const json j = read_json_file(std::string(NFOLD_DATA_DIR) + "/" + file);
  return object_from_json(ring_from_json(j.at("ring")), j.at("object"));
}

}  // namespace

TEST_CASE("shipped examples validate as expected") {
  CHECK(validate(load_object("xxx_q_x3.json")).valid);
  CHECK(validate(load_object("xx_q_x2.json")).valid);
  CHECK(validate(load_object("xx_f4frob_x2.json")).valid);
  const ValidationReport bad = validate(load_object("broken_q_x3.json"));
  CHECK_FALSE(bad.valid);
  CHECK(bad.failing_rotation.has_value());
}

TEST_CASE("generated objects validate over every preset") {
  for (const auto& [name, spec] : ring_presets()) {
    const Ring R(spec);
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 10; ++t) {
        const SeededObject x = random_seeded(R, rng, {n, 3, 4});
        CHECK_MESSAGE(validate(x.object).valid, name);
        CHECK(compose(x.iso, x.iso_inv) == identity_morphism(x.seed_sum));
        CHECK(compose(x.iso_inv, x.iso) == identity_morphism(x.object));
      }
  }
}

TEST_CASE("trivial factorizations have omega in one slot") {
  const Ring R = preset_ring("Q:x3");
  const NFactorization t = theta(R, 3, 1, 2);
  CHECK(validate(t).valid);
  std::size_t omegas = 0;
  for (const auto& m : t.maps()) omegas += m.same_entries(TwistedMatrix::scalar(R, 2, R.omega()));
  CHECK(omegas == 1);
  CHECK(projection(t, 2) == 2);
}

TEST_CASE("face and degeneracy on monomial objects") {
  const Ring R = preset_ring("Q:x4");
  const NFactorization x = oracle::monomial_object(R, {1, 1, 2});
  const NFactorization f1 = face(x, 1);
  CHECK(f1.n() == 4);
  CHECK(validate(f1).valid);
  CHECK(degeneracy(f1, 1) == x);
  // Degeneracy merges two consecutive maps: (x, x, x^2) -> (x^2, x^2) at slot 0.
  const NFactorization d0 = degeneracy(x, 0);
  CHECK(d0 == oracle::monomial_object(R, {2, 2}));
  CHECK(shift(x, 3) == x);
  CHECK(shift(shift(x), -1) == x);
}

TEST_CASE("the n-th shift is the entrywise inverse twist") {
  const Ring R = preset_ring("F4frob:x");
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      const NFactorization x = random_factorization(R, rng, {n, 2, 3});
      CHECK(shift(x, static_cast<long>(n)) == twist_object(x, -1));
    }
}

TEST_CASE("morphism checks reject broken squares") {
  const Ring R = preset_ring("Q:x2");
  const NFactorization x = oracle::monomial_object(R, {1, 1});
  CHECK(check_morphism(identity_morphism(x)).valid);
  const FactorMorphism bad(x, x, {TwistedMatrix::identity(R, 1), TwistedMatrix(R, 1, 1)});
  CHECK_FALSE(check_morphism(bad).valid);
  CHECK_THROWS_AS(is_p_null_homotopic(bad), Error);
}

TEST_CASE("functor values compose") {
  const Ring R = preset_ring("F5:x3");
  std::mt19937_64 rng(9);
  const Functor f = then(face_functor(3, 2), degeneracy_functor(3, 2));
  for (int t = 0; t < 10; ++t) {
    const NFactorization x = random_factorization(R, rng, {3, 2, 3});
    CHECK(f(x) == x);
  }
}
