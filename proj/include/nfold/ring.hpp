#pragma once
// The base ring A = K[x; phi] (commutative when phi is the identity), a normal
// regular element omega, the automorphism sigma it induces, and Abar = A/(omega).
//
// Multiplication obeys x * c = phi(c) * x. For omega = c * x^m with phi(c) = c
// the induced automorphism is sigma = phi^m acting on coefficients and fixing x.

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nfold/field.hpp"

namespace nfold {

// Dense polynomial, coefficients low-to-high; the last stored coefficient is
// nonzero (the zero polynomial has no coefficients).
struct Poly {
  std::vector<Scalar> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

struct RingSpec {
  FieldSpec field;
  long sigma_power = 0;  // power of Frobenius giving phi
  std::vector<Scalar> omega;
};

class Ring {
 public:
  // Validates normality of omega; throws InvalidInput otherwise.
  Ring(Field field, long phi_power, std::vector<Scalar> omega);
  explicit Ring(const RingSpec& spec) : Ring(Field(spec.field), spec.sigma_power, spec.omega) {}

  const Field& field() const { return impl_->field; }
  long phi_power() const { return impl_->phi_power; }
  const Poly& omega() const { return impl_->omega; }
  int omega_degree() const { return impl_->omega.degree(); }
  bool is_commutative() const { return impl_->commutative; }
  bool same_as(const Ring& o) const;

  Poly zero() const { return {}; }
  Poly one() const;
  Poly constant(const Scalar& c) const;
  Poly monomial(const Scalar& c, int k) const;
  Poly x_pow(int k) const { return monomial(field().one(), k); }
  Poly from_coeffs(std::vector<Scalar> c) const;
  Poly from_ints(const std::vector<long>& c) const;

  bool equal(const Poly& a, const Poly& b) const;
  bool is_one(const Poly& a) const;
  // Degree-0 nonzero polynomial (a unit of A).
  bool is_unit(const Poly& a) const { return a.degree() == 0; }
  const Scalar& lead(const Poly& a) const { return a.c.back(); }

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  // c * a for a constant c.
  Poly scale(const Scalar& c, const Poly& a) const;

  // Coefficientwise phi^power.
  Poly apply_phi(const Poly& a, long power) const;
  // Coefficientwise sigma^power = phi^(m*power); x is fixed.
  Poly apply_sigma(const Poly& a, long power) const;
  Scalar sigma_coeff(const Scalar& c, long power) const;

  // a = q*b + r with deg r < deg b.
  std::pair<Poly, Poly> left_divmod(const Poly& a, const Poly& b) const;
  // Canonical representative modulo (omega).
  Poly quotient_reduce(const Poly& a) const { return left_divmod(a, omega()).second; }
  // Makes a monic by a left constant factor; returns that factor.
  Scalar monic_factor(const Poly& a) const;

  Poly random(std::mt19937_64& rng, int max_degree, int coeff_bound = 3) const;
  std::string to_string(const Poly& a) const;
  RingSpec spec() const;

 private:
  struct Impl {
    Field field;
    long phi_power;
    Poly omega;
    bool commutative;
  };
  std::shared_ptr<const Impl> impl_;

  void trim(Poly& a) const;
};

// A ring element bound to its ring, for call sites that mix rings.
struct RingElem {
  Ring ring;
  Poly value;
};
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);

}  // namespace nfold
