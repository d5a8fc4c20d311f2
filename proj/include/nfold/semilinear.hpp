#pragma once
// Linear systems whose unknowns are matrices over A. The operator is given
// as a callable that must be additive and linear over the prime field; in
// the commutative case it must also be A-linear in each unknown entry, which
// allows exact solving through Hermite forms. In the skew case unknowns are
// expanded into prime-field coordinates under a degree bound.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "nfold/kmatrix.hpp"
#include "nfold/normal_forms.hpp"

namespace nfold {

struct UnknownBlock {
  std::size_t rows = 0, cols = 0;
  long twist = 0;
};

using MatrixTuple = std::vector<TwistedMatrix>;
using LinearOperator = std::function<MatrixTuple(const MatrixTuple&)>;

struct LinearSystem {
  Ring ring;
  std::vector<UnknownBlock> unknowns;
  LinearOperator apply;

  std::size_t unknown_count() const;
  MatrixTuple zero_unknowns() const;
  // Unknown tuple with a single entry set to c (flattened index, row-major
  // within each block, blocks in order).
  MatrixTuple basis_unknowns(std::size_t index, const Poly& c) const;
};

// 1 x N row of all entries (blocks in order, row-major) and its inverse.
TwistedMatrix flatten(const Ring& ring, const MatrixTuple& m);
MatrixTuple unflatten(const TwistedMatrix& row, const std::vector<UnknownBlock>& shapes);
std::vector<UnknownBlock> shapes_of(const MatrixTuple& m);

// Commutative rings: matrix M with flatten(apply(u)) = flatten(u) * M.
TwistedMatrix operator_matrix(const LinearSystem& sys);

// Commutative rings: exact solution of apply(u) = target, or nullopt.
std::optional<MatrixTuple> solve_exact(const LinearSystem& sys, const MatrixTuple& target);
std::optional<MatrixTuple> solve_exact(const LinearSystem& sys, const HermiteResult& hf, const MatrixTuple& target);

// Any supported ring: solution with every unknown entry of degree <= bound,
// found over the prime field, or nullopt when none exists within the bound.
std::optional<MatrixTuple> solve_bounded(const LinearSystem& sys, const MatrixTuple& target, int bound);

bool tuples_equal(const MatrixTuple& a, const MatrixTuple& b);

}  // namespace nfold
