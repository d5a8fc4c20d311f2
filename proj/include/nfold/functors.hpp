#pragma once
// Functors between the categories F_n as first-class values, their
// composites, the explicit adjunctions between faces and degeneracies, and
// the six functors of the recollements.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nfold/factorization.hpp"

namespace nfold {

struct Functor {
  std::string name;
  std::size_t src_n = 0, dst_n = 0;
  std::function<NFactorization(const NFactorization&)> obj;
  std::function<FactorMorphism(const FactorMorphism&)> mor;

  NFactorization operator()(const NFactorization& x) const { return obj(x); }
  FactorMorphism operator()(const FactorMorphism& f) const { return mor(f); }
};

Functor identity_functor(std::size_t n);
// g after f.
Functor then(const Functor& f, const Functor& g);
// Composite of a chain applied left to right.
Functor chain(const std::vector<Functor>& steps, std::size_t n_if_empty);

Functor shift_functor(std::size_t n, long power);
Functor theta_functor(std::size_t n, std::size_t i);        // F_1 -> F_n
Functor projection_functor(std::size_t n, std::size_t i);   // F_n -> F_1
Functor face_functor(std::size_t n, std::size_t i);         // F_n -> F_{n+1}
Functor degeneracy_functor(std::size_t n, std::size_t i);   // F_{n+1} -> F_n

// An adjunction L -| R with L : C -> D, R : D -> C, given by the hom-set
// bijection phi : Hom_D(L X, Y) -> Hom_C(X, R Y) and its inverse.
struct Adjunction {
  std::string name;
  Functor left, right;
  std::function<FactorMorphism(const NFactorization& x, const NFactorization& y, const FactorMorphism& f)> phi;
  std::function<FactorMorphism(const NFactorization& x, const NFactorization& y, const FactorMorphism& g)> phi_inv;

  FactorMorphism unit(const NFactorization& x) const;    // X -> R L X
  FactorMorphism counit(const NFactorization& y) const;  // L R Y -> Y
};

// theta_n^i -| pr_{n+1}^i for 0 <= i <= n-1.
Adjunction face_degeneracy_adjunction(std::size_t n, std::size_t i);
// pr_{n+1}^{i-1} -| theta_n^i for 1 <= i <= n (i = n is pr^{n-1} -| S theta^0).
Adjunction degeneracy_face_adjunction(std::size_t n, std::size_t i);
// pr_{n+1}^0 -| S^n theta_n^0 S^{-(n-1)}, transported by conjugation with shifts.
Adjunction corner_adjunction(std::size_t n);
// S^{power} -| S^{-power} on F_n.
Adjunction shift_adjunction(std::size_t n, long power);
// (L2 L1) -| (R1 R2) for L1 -| R1 (C -> D) and L2 -| R2 (D -> E).
Adjunction compose_adjunctions(const Adjunction& first, const Adjunction& second);

struct Recollement {
  std::size_t n = 0, k = 0;
  Functor inc;           // F_{n-k+1} -> F_n
  Functor inc_left;      // left adjoint of inc, F_n -> F_{n-k+1}
  Functor inc_right;     // right adjoint of inc
  Functor quotient;      // pr^0_{k+1} ... pr^0_n : F_n -> F_k
  Functor section_left;  // left adjoint of the quotient, F_k -> F_n
  Functor section_right; // right adjoint of the quotient
  Adjunction adj_inc_left, adj_inc_right, adj_quot_left, adj_quot_right;
};

Recollement recollement_functors(std::size_t n, std::size_t k);

}  // namespace nfold
