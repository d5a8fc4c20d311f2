#pragma once
// Coefficient fields: the rationals, prime fields F_p and extension fields
// F_{p^e} given by an irreducible modulus. Elements are plain values; all
// arithmetic goes through a Field context, in the style of a ring context
// object that owns tables and parameters.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace nfold {

enum class FieldKind { Rationals, Finite };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;                  // characteristic (finite fields)
  std::uint32_t e = 1;                  // extension degree
  std::vector<std::uint32_t> modulus;   // monic, degree e, low-to-high over F_p (e > 1)

  static FieldSpec rationals();
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  bool operator==(const FieldSpec&) const = default;
};

// A finite field element is its integer code sum(digit_i * p^i) over the
// polynomial basis 1, u, ..., u^{e-1}; a rational is an mpq_class.
using Scalar = std::variant<std::uint32_t, mpq_class>;

class Field {
 public:
  explicit Field(const FieldSpec& spec);
  Field() : Field(FieldSpec::rationals()) {}

  const FieldSpec& spec() const { return impl_->spec; }
  bool is_rational() const { return impl_->spec.kind == FieldKind::Rationals; }
  bool is_finite() const { return !is_rational(); }
  bool is_prime() const { return is_finite() && impl_->spec.e == 1; }
  std::uint32_t characteristic() const { return impl_->spec.p; }
  std::uint32_t degree() const { return impl_->spec.e; }
  // Number of elements (finite fields only).
  std::uint64_t order() const { return impl_->q; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  // Finite fields: element with the given code. Rationals: num/den.
  Scalar from_code(std::uint32_t code) const;
  Scalar from_rational(const mpq_class& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // a^(p^power) for finite fields, power taken modulo e (may be negative);
  // identity on the rationals.
  Scalar frobenius(const Scalar& a, long power) const;

  // Coordinates over the prime field (finite fields): the e base-p digits.
  std::vector<std::uint32_t> digits(const Scalar& a) const;
  Scalar from_digits(const std::vector<std::uint32_t>& d) const;

  // Uniform element (finite) or small rational with numerator in [-bound, bound].
  Scalar random(std::mt19937_64& rng, int bound = 3) const;

  std::string to_string(const Scalar& a) const;

  bool operator==(const Field& o) const { return impl_ == o.impl_ || impl_->spec == o.impl_->spec; }

 private:
  struct Impl {
    FieldSpec spec;
    std::uint64_t q = 0;
    // Tables for extension fields (e > 1).
    std::vector<std::uint32_t> log, exp, frob;
  };
  std::shared_ptr<const Impl> impl_;

  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_code(std::uint32_t a) const;
};

// Code of a finite-field scalar (asserts the alternative).
inline std::uint32_t code_of(const Scalar& a) { return std::get<std::uint32_t>(a); }

bool is_prime_number(std::uint64_t n);

}  // namespace nfold
