#pragma once
// Seeded generators for factorizations, morphisms, witnesses and chains.
// Identical seeds and bounds give identical outputs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nfold/cok_bridge.hpp"
#include "nfold/homotopy.hpp"

namespace nfold {

struct RandomBounds {
  std::size_t n = 3;
  std::size_t max_rank = 3;
  int max_deg = 4;
};

// omega = lead * prod(atoms), atoms monic of positive degree.
struct OmegaAtoms {
  Scalar lead;
  std::vector<Poly> atoms;
};
OmegaAtoms omega_atoms(const Ring& ring);

// A factorization obtained from a direct sum of rank-one seeds by
// conjugation. seeds[s][i] is the 1x1 entry of d^i in summand s; iso : seed
// sum -> object.
struct SeededObject {
  NFactorization object;
  NFactorization seed_sum;
  std::vector<std::vector<Poly>> seeds;
  FactorMorphism iso, iso_inv;
};

// Rank-one seed: atoms of omega distributed over the n slots.
std::vector<Poly> random_seed(const Ring& ring, std::mt19937_64& rng, std::size_t n);
NFactorization seed_object(const Ring& ring, const std::vector<std::vector<Poly>>& seeds);
SeededObject random_seeded(const Ring& ring, std::mt19937_64& rng, const RandomBounds& b);
NFactorization random_factorization(const Ring& ring, std::mt19937_64& rng, const RandomBounds& b);

// Invertible matrix over A (product of elementary operations) and its inverse.
std::pair<TwistedMatrix, TwistedMatrix> random_unimodular(const Ring& ring, std::mt19937_64& rng, std::size_t r,
                                                         int steps, int deg);

// Random morphism between seeded objects, built from diagonal morphisms
// between seed summands and transported along the conjugations.
FactorMorphism random_morphism(const SeededObject& x, const SeededObject& y, std::mt19937_64& rng);
HomotopyWitness random_witness(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng, int deg);
FactorMorphism random_null_homotopic(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng, int deg);

// Chain of submodules M^1 c ... c M^{len} of a torsion module with random
// presentations; the inclusions are injective by construction.
ChainModule random_chain(const Ring& ring, std::mt19937_64& rng, std::size_t len, std::size_t max_summands);

}  // namespace nfold
