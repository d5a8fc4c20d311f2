#pragma once
// Randomized law suites. Each suite is keyed by the tag of the statement it
// exercises and counts executed cases and failures.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nfold/functors.hpp"
#include "nfold/random.hpp"

namespace nfold {

struct Scenario {
  RingSpec ring;
  std::uint64_t seed = 42;
  std::size_t n = 3;
  std::size_t max_rank = 2;
  int max_deg = 4;
  std::size_t samples = 8;
  std::vector<std::string> suites;  // empty: all tags
};

struct SuiteResult {
  std::string tag;
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

// Records checks for one suite.
class LawRecorder {
 public:
  explicit LawRecorder(SuiteResult& r) : r_(r) {}
  bool check(bool ok, const std::string& what);
  SuiteResult& result() { return r_; }

 private:
  SuiteResult& r_;
};

const std::vector<std::string>& law_tags();
std::string law_title(const std::string& tag);

SuiteResult run_suite(const std::string& tag, const Ring& ring, const Scenario& sc);
std::vector<SuiteResult> run_laws(const Scenario& sc);

// Adjunction checks on one pair (X in the source of L, Y in its target):
// phi lands in Hom(X, RY), phi and phi_inv are mutually inverse, naturality
// along endomorphisms a of X and b of Y, and both triangle identities.
void check_adjunction(LawRecorder& rec, const Adjunction& adj, const NFactorization& x, const NFactorization& y,
                      const FactorMorphism& f, const FactorMorphism& g, const FactorMorphism& a,
                      const FactorMorphism& b);

// A random morphism X -> Y: a combination of Hom basis elements over
// commutative rings when the hom space is small, otherwise a random
// null-homotopic morphism.
// Section identities, stable vanishing of inc objects under the quotient, and
// the four adjunctions of the (n, k) recollement.
void check_recollement(LawRecorder& rec, const Ring& ring, std::size_t n, std::size_t k, std::mt19937_64& rng,
                       const RandomBounds& bounds, std::size_t samples);
FactorMorphism random_hom(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng);

}  // namespace nfold
