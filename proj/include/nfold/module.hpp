#pragma once
// Finitely presented left A-modules A^g / rowspace(relations) and their
// finite-dimensional models over a field when they are killed by omega.

#include <cstddef>
#include <memory>
#include <vector>

#include "nfold/kmatrix.hpp"
#include "nfold/normal_forms.hpp"

namespace nfold {

struct ModulePresentation {
  std::size_t generators = 0;
  TwistedMatrix relations;  // r x g, twist 0

  ModulePresentation(std::size_t g, TwistedMatrix rel);
  const Ring& ring() const { return relations.ring(); }
  // Whether omega * e_j lies in the relation submodule for every generator.
  bool is_omega_torsion() const;
};

enum class LinearizationMethod {
  Smith,     // commutative rings: invariant factors of [relations; omega*I]
  Quotient,  // any supported ring: Abar^g modulo the span of relation multiples
};

// A vector-space model of an omega-torsion module. Coordinates are row
// vectors; actions satisfy coords(x * v) = coords(v) * x_action().
class KLinearization {
 public:
  KLinearization(const ModulePresentation& p, LinearizationMethod method);

  const Field& base_field() const { return base_; }
  std::size_t dim() const { return dim_; }
  std::size_t generators() const { return gens_; }
  LinearizationMethod method() const { return method_; }
  const Ring& ring() const { return ring_; }

  // Coordinates of the class of a 1 x g row vector.
  KMatrix encode(const TwistedMatrix& v) const;
  // A 1 x g representative of a coordinate row vector.
  TwistedMatrix decode(const KMatrix& c) const;

  // Matrix of left multiplication by x (and by the field generator u when
  // the base field is the prime subfield of a proper extension).
  const KMatrix& x_action() const { return x_action_; }
  const std::vector<KMatrix>& scalar_actions() const { return scalar_actions_; }

  // Degrees of the nonunit invariant factors (Smith method only).
  const std::vector<int>& factor_degrees() const { return factor_degrees_; }

 private:
  Ring ring_;
  Field base_;
  LinearizationMethod method_;
  std::size_t gens_ = 0, dim_ = 0;
  // Smith data.
  std::shared_ptr<TwistedMatrix> v_, vinv_;
  std::vector<Poly> diag_;
  std::vector<int> factor_degrees_;
  // Quotient data.
  std::shared_ptr<KMatrix> reduced_;
  std::vector<std::size_t> pivots_, free_;
  std::size_t ambient_ = 0;
  KMatrix x_action_;
  std::vector<KMatrix> scalar_actions_;

  KMatrix ambient_coords(const TwistedMatrix& v) const;
  TwistedMatrix from_ambient(const std::vector<Scalar>& a) const;
};

// Default method: Smith for commutative rings, Quotient otherwise.
KLinearization k_linearize(const ModulePresentation& p);
KLinearization k_linearize(const ModulePresentation& p, LinearizationMethod method);

// Matrix (row convention) of the module map sending generator i of the source
// to row i of `images`, in the coordinates of the two linearizations.
KMatrix linear_map(const KLinearization& src, const KLinearization& dst, const TwistedMatrix& images);

// Whether rows of (relations(src) * images) vanish in dst.
bool map_well_defined(const ModulePresentation& src, const KLinearization& dst, const TwistedMatrix& images);

// Base field used for linearizations over this ring: the prime subfield for
// skew rings over proper extensions, the coefficient field otherwise.
Field linearization_field(const Ring& ring);

}  // namespace nfold
