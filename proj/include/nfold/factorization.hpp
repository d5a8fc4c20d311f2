#pragma once
// n-fold matrix factorizations of omega on free components and their
// morphisms, with the structural functors: shift, trivial factorizations,
// projections, faces and degeneracies.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nfold/twisted_matrix.hpp"

namespace nfold {

// Maps d^0..d^{n-1}; d^i : X^i -> X^{i+1} has shape r_i x r_{i+1}, twist 0
// for i < n-1 and twist 1 for the wrapping map d^{n-1} : X^{n-1} -> sigma(X^0).
class NFactorization {
 public:
  NFactorization(Ring ring, std::vector<TwistedMatrix> maps);

  const Ring& ring() const { return ring_; }
  std::size_t n() const { return maps_.size(); }
  const TwistedMatrix& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<TwistedMatrix>& maps() const { return maps_; }
  std::size_t rank(std::size_t i) const { return maps_.at(i % n()).rows(); }
  std::vector<std::size_t> ranks() const;
  std::size_t total_rank() const;

  bool operator==(const NFactorization& o) const;
  bool operator!=(const NFactorization& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<TwistedMatrix> maps_;
};

struct ValidationReport {
  bool valid = true;
  std::string message;
  std::optional<std::size_t> failing_rotation;
  std::optional<TwistedMatrix> difference;  // rotation composite minus omega*I
};

ValidationReport validate(const NFactorization& x);
void require_valid(const NFactorization& x, const char* where);

// d^j ... d^i composed in application order (d^i first); identity when j < i.
TwistedMatrix compose_range(const NFactorization& x, long i, long j);

class FactorMorphism {
 public:
  FactorMorphism(NFactorization source, NFactorization target, std::vector<TwistedMatrix> components);

  const NFactorization& source() const { return source_; }
  const NFactorization& target() const { return target_; }
  std::size_t n() const { return comps_.size(); }
  const TwistedMatrix& component(std::size_t i) const { return comps_.at(i); }
  const std::vector<TwistedMatrix>& components() const { return comps_; }
  const Ring& ring() const { return source_.ring(); }

  bool operator==(const FactorMorphism& o) const;
  bool operator!=(const FactorMorphism& o) const { return !(*this == o); }
  bool is_zero() const;

  FactorMorphism operator+(const FactorMorphism& o) const;
  FactorMorphism operator-(const FactorMorphism& o) const;
  FactorMorphism operator-() const;

 private:
  NFactorization source_, target_;
  std::vector<TwistedMatrix> comps_;
};

struct MorphismReport {
  bool valid = true;
  std::string message;
  std::optional<std::size_t> failing_square;
};

// Shapes, twist 0 and the n commuting squares
// D_X^i F^{i+1} = F^i D_Y^i (i < n-1), D_X^{n-1} F^0 = sigma(F^{n-1}) D_Y^{n-1}.
MorphismReport check_morphism(const FactorMorphism& f);
void require_morphism(const FactorMorphism& f, const char* where);

FactorMorphism identity_morphism(const NFactorization& x);
FactorMorphism zero_morphism(const NFactorization& x, const NFactorization& y);
// f then g.
FactorMorphism compose(const FactorMorphism& f, const FactorMorphism& g);
// Componentwise left multiplication by a central element.
FactorMorphism scale_morphism(const FactorMorphism& f, const Poly& c);

struct DirectSum {
  NFactorization object;
  FactorMorphism inj_left, inj_right, proj_left, proj_right;
};
DirectSum direct_sum(const NFactorization& x, const NFactorization& y);
NFactorization direct_sum_object(const NFactorization& x, const NFactorization& y);
NFactorization direct_sum_object(const std::vector<NFactorization>& parts);
FactorMorphism direct_sum_morphism(const FactorMorphism& f, const FactorMorphism& g);
// The zero factorization with all ranks 0.
NFactorization zero_object(const Ring& ring, std::size_t n);

// Entrywise sigma^power on every map (the object S^n(X) is twist_object(X, -1)).
NFactorization twist_object(const NFactorization& x, long power);
FactorMorphism twist_morphism(const FactorMorphism& f, long power);

// Shift S and its powers (negative powers use the inverse construction).
NFactorization shift(const NFactorization& x, long power = 1);
FactorMorphism shift(const FactorMorphism& f, long power = 1);

// An object of F_1: the free module A^m with omega acting.
NFactorization module_object(const Ring& ring, std::size_t m);

// Trivial factorization theta^i(A^m) in F_n and theta^i on an A-linear map
// F : A^m -> A^m' (twist 0).
NFactorization theta(const Ring& ring, std::size_t n, std::size_t i, std::size_t m);
FactorMorphism theta(std::size_t n, std::size_t i, const TwistedMatrix& f);

// Projection pr^i: rank of X^i; on morphisms the component f^i.
std::size_t projection(const NFactorization& x, std::size_t i);
TwistedMatrix projection(const FactorMorphism& f, std::size_t i);

// Face theta_n^i : F_n -> F_{n+1}, 0 <= i <= n.
NFactorization face(const NFactorization& x, std::size_t i);
FactorMorphism face(const FactorMorphism& f, std::size_t i);

// Degeneracy pr_{n+1}^i : F_{n+1} -> F_n, 0 <= i <= n (n+1 = y.n()).
NFactorization degeneracy(const NFactorization& y, std::size_t i);
FactorMorphism degeneracy(const FactorMorphism& g, std::size_t i);

}  // namespace nfold
