#pragma once
// Hermite and Smith normal forms over the (left-)Euclidean ring A, and exact
// solving of W * M = T in row-vector convention.

#include <cstddef>
#include <optional>
#include <vector>

#include "nfold/twisted_matrix.hpp"

namespace nfold {

struct HermiteResult {
  TwistedMatrix h;                  // u * m = h, row echelon with monic pivots
  TwistedMatrix u;                  // invertible over A
  std::vector<std::size_t> pivots;  // pivot column of rows 0..rank-1
  Scalar det_u;                     // determinant of u (commutative rings only)
  std::size_t rank() const { return pivots.size(); }
};

// Pivot choice: lowest degree, ties broken by lowest row index. Entries
// above each pivot are reduced by left division.
HermiteResult hermite_form(const TwistedMatrix& m);

struct SmithResult {
  TwistedMatrix s;         // u * m * v = s, diagonal
  TwistedMatrix u, v;
  std::vector<Poly> diag;  // min(rows, cols) diagonal entries; nonzero ones monic and dividing
  // Nonzero diagonal entries that are not units.
  std::vector<Poly> invariant_factors(const Ring& ring) const;
};

// Commutative rings only.
SmithResult smith_form(const TwistedMatrix& m);

struct SolveResult {
  std::optional<TwistedMatrix> w;  // w * m = target when solvable
  // Certificate when unsolvable: first target row that fails and the residual
  // left after reducing it against the Hermite rows.
  std::size_t failing_row = 0;
  std::optional<TwistedMatrix> residual;
  bool solvable() const { return w.has_value(); }
};

SolveResult solve_right(const TwistedMatrix& m, const TwistedMatrix& target);
SolveResult solve_right(const HermiteResult& hf, const TwistedMatrix& target);

// Basis (rows) of the left kernel {w : w * m = 0}, read off from the Hermite
// transform.
TwistedMatrix left_kernel(const TwistedMatrix& m);
TwistedMatrix left_kernel(const HermiteResult& hf);

}  // namespace nfold
