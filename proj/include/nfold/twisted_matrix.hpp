#pragma once
// Matrices over A carrying a twist degree t. The pair (M, t) is the
// sigma^t-semilinear map A^rows -> A^cols, v |-> sigma^t(v) * M, on row
// vectors; composition is written in application order.

#include <cstddef>
#include <string>
#include <vector>

#include "nfold/ring.hpp"

namespace nfold {

class TwistedMatrix {
 public:
  TwistedMatrix(Ring ring, std::size_t rows, std::size_t cols, long twist = 0);

  static TwistedMatrix identity(const Ring& ring, std::size_t n, long twist = 0);
  // c * I for a ring element c.
  static TwistedMatrix scalar(const Ring& ring, std::size_t n, const Poly& c, long twist = 0);
  // omega * I at twist 1: the canonical map X -> sigma-twist of X.
  static TwistedMatrix omega_map(const Ring& ring, std::size_t n);
  static TwistedMatrix from_ints(const Ring& ring, const std::vector<std::vector<std::vector<long>>>& e,
                                 long twist = 0);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long twist() const { return twist_; }
  TwistedMatrix with_twist(long t) const;

  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool operator==(const TwistedMatrix& o) const;
  bool operator!=(const TwistedMatrix& o) const { return !(*this == o); }
  // Same entries, ignoring the twist.
  bool same_entries(const TwistedMatrix& o) const;
  bool is_zero() const;
  int max_degree() const;

  // Entrywise sums/differences; twists must agree.
  TwistedMatrix operator+(const TwistedMatrix& o) const;
  TwistedMatrix operator-(const TwistedMatrix& o) const;
  TwistedMatrix operator-() const;
  // Plain matrix product; the result's twist is the sum of twists.
  TwistedMatrix product(const TwistedMatrix& o) const;
  // c * M entrywise (left multiplication by a ring element).
  TwistedMatrix left_scale(const Poly& c) const;

  TwistedMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const TwistedMatrix& b);
  TwistedMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  static TwistedMatrix vstack(const std::vector<TwistedMatrix>& parts);
  static TwistedMatrix hstack(const std::vector<TwistedMatrix>& parts);
  static TwistedMatrix block_diag(const TwistedMatrix& a, const TwistedMatrix& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  long twist_;
  std::vector<Poly> entries_;
};

// f then g: (sigma^{t_g}(F) * G, t_f + t_g).
TwistedMatrix twisted_compose(const TwistedMatrix& f, const TwistedMatrix& g);
// Composite of a sequence in application order; `n` is the identity size
// used when the sequence is empty.
TwistedMatrix twisted_compose_all(const Ring& ring, const std::vector<TwistedMatrix>& seq, std::size_t n);
// Entrywise sigma^power, twist unchanged.
TwistedMatrix twist_matrix(const TwistedMatrix& f, long power);

void require_same_ring(const Ring& a, const Ring& b, const char* where);

}  // namespace nfold
