#include <random>

#include "doctest.h"
#include "nfold/error.hpp"
#include "nfold/json_io.hpp"
#include "nfold/presets.hpp"
#include "nfold/random.hpp"

using namespace nfold;

TEST_CASE("objects, morphisms and chains survive a JSON round trip") {
  for (const auto& [name, spec] : ring_presets()) {
    const Ring R(spec);
    CHECK(ring_from_json(to_json(R)).same_as(R));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
      const SeededObject x = random_seeded(R, rng, {3, 2, 4});
      const json j = json::parse(to_json(x.object).dump());
      CHECK(object_from_json(R, j) == x.object);
      const FactorMorphism f = random_morphism(x, x, rng);
      CHECK(morphism_from_json(R, json::parse(to_json(f).dump())) == f);
      const ChainModule c = cok0(x.object);
      const ChainModule back = chain_from_json(R, json::parse(to_json(c).dump()));
      CHECK(back.dims() == c.dims());
    }
  }
}

TEST_CASE("malformed input is an input error") {
  const Ring R = preset_ring("Q:x2");
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"field": {"kind": "prime", "p": 6}, "omega": [0, 1]})")), Error);
  CHECK_THROWS_AS(object_from_json(R, json::parse(R"({"maps": [{"rows": 1}]})")), Error);
  CHECK_THROWS_AS(object_from_json(R, json::parse(R"({"n": 3, "maps": []})")), Error);
  CHECK_THROWS_AS(parse_ring("no-such-ring"), Error);
  CHECK(parse_ring(R"({"field": {"kind": "rationals"}, "omega": ["0", "0", "1"]})").same_as(R));
}
