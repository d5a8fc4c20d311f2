#pragma once
// p-null-homotopic morphisms, factorization through trivial objects, and
// stable Hom groups.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nfold/factorization.hpp"
#include "nfold/module.hpp"
#include "nfold/semilinear.hpp"

namespace nfold {

// h^j : X^j -> sigma^{-1}(Y^{j+1}) (twist -1) for j < n-1, h^{n-1} : X^{n-1} -> Y^0.
struct HomotopyWitness {
  std::vector<TwistedMatrix> h;
};

std::vector<UnknownBlock> witness_shapes(const NFactorization& x, const NFactorization& y);
HomotopyWitness zero_witness(const NFactorization& x, const NFactorization& y);

// f^i = sum over j of the path X^i -> X^j, h^j, then Y^{j+1} -> Y^i along d_Y.
FactorMorphism reconstruct_from_witness(const NFactorization& x, const NFactorization& y, const HomotopyWitness& w);

enum class Verdict { Yes, No, NoUpToBound };
const char* to_string(Verdict v);

struct HomotopyResult {
  Verdict verdict = Verdict::No;
  std::optional<HomotopyWitness> witness;
  int bound = -1;  // degree bound reached (skew rings)
  bool found() const { return verdict == Verdict::Yes; }
};

struct BoundedOptions {
  int escalations = 2;  // bound grows by deg(omega) this many times
};

HomotopyResult is_p_null_homotopic(const FactorMorphism& f, const BoundedOptions& opt = {});
// Only h^{n-1} may be nonzero: f factors through some theta^0(P) (the class I).
HomotopyResult factors_through_theta0(const FactorMorphism& f, const BoundedOptions& opt = {});

// The trivial object T = theta^0(Y^0) + ... + theta^{n-1}(Y^{n-1}) with the
// canonical map eps : T -> Y through which every map from a trivial object
// to Y factors.
struct TrivialCover {
  NFactorization object;
  FactorMorphism eps;
  std::vector<std::size_t> offsets;  // column offset of each theta^i block in T^k
};
TrivialCover trivial_cover(const NFactorization& y);

// The morphism X -> theta^i(A^m) determined by alpha : X^{i-1} -> A^m.
FactorMorphism map_to_theta(const NFactorization& x, std::size_t i, const TwistedMatrix& alpha);

struct TrivialFactorization {
  FactorMorphism into;   // a : X -> T
  FactorMorphism out;    // eps : T -> Y, with a then eps = f
  std::vector<TwistedMatrix> alphas;
};

// Decides whether f factors through a sum of trivial factorizations by
// solving for a : X -> T with a then eps = f.
std::optional<TrivialFactorization> factors_through_trivials(const FactorMorphism& f, Verdict* verdict = nullptr,
                                                             const BoundedOptions& opt = {});
// The factorization through trivial objects induced by a witness.
TrivialFactorization trivial_factorization_from_witness(const FactorMorphism& f, const HomotopyWitness& w);

// Witness transport along composition (f ~ 0 implies e f ~ 0 and f g ~ 0).
HomotopyWitness transport_pre(const FactorMorphism& e, const HomotopyWitness& w);
HomotopyWitness transport_post(const HomotopyWitness& w, const FactorMorphism& g);
// Face transport: a witness for theta_m^{m-1}(f) gives one for f.
HomotopyWitness transport_face(const NFactorization& y, const HomotopyWitness& w);

// Full morphism space as a free A-module (commutative rings).
struct HomModule {
  NFactorization source, target;
  std::vector<FactorMorphism> basis;
  TwistedMatrix basis_rows;  // one flattened morphism per row
};
HomModule hom_module(const NFactorization& x, const NFactorization& y);

struct StableHomReport {
  std::size_t generators = 0;
  TwistedMatrix relations;  // presentation of the quotient in hom-basis coordinates
  std::vector<Poly> invariant_factors;
  std::size_t k_dimension = 0;
  std::vector<FactorMorphism> representatives;  // one per nonunit invariant factor
  bool omega_torsion = true;
  bool ideal_class_only = false;
  std::string summary(const Ring& ring) const;
};
// Quotient of Hom(X, Y) by p-null-homotopic maps (or by the class I when
// ideal_class_only is set). Commutative rings only.
StableHomReport stable_hom(const NFactorization& x, const NFactorization& y, bool ideal_class_only = false);

HomotopyResult is_stably_zero(const NFactorization& x, const BoundedOptions& opt = {});

}  // namespace nfold
