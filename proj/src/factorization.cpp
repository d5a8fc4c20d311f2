#include "nfold/factorization.hpp"

#include <sstream>

#include "nfold/error.hpp"

namespace nfold {

NFactorization::NFactorization(Ring ring, std::vector<TwistedMatrix> maps)
    : ring_(std::move(ring)), maps_(std::move(maps)) {
  require(!maps_.empty(), ErrorKind::InvalidInput, "a factorization needs at least one map");
  for (const auto& m : maps_) require_same_ring(ring_, m.ring(), "factorization map over a different ring");
}

std::vector<std::size_t> NFactorization::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : maps_) r.push_back(m.rows());
  return r;
}

std::size_t NFactorization::total_rank() const {
  std::size_t t = 0;
  for (const auto& m : maps_) t += m.rows();
  return t;
}

bool NFactorization::operator==(const NFactorization& o) const {
  if (n() != o.n() || !ring_.same_as(o.ring_)) return false;
  for (std::size_t i = 0; i < n(); ++i)
    if (maps_[i] != o.maps_[i]) return false;
  return true;
}

std::string NFactorization::to_string() const {
  std::ostringstream os;
  os << "F_" << n() << " object, ranks (";
  for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << rank(i);
  os << ")";
  for (std::size_t i = 0; i < n(); ++i) os << "\n  d^" << i << " = " << maps_[i].to_string();
  return os.str();
}

ValidationReport validate(const NFactorization& x) {
  ValidationReport rep;
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i) {
    const TwistedMatrix& d = x.map(i);
    const long want = i + 1 == n ? 1 : 0;
    if (d.twist() != want) {
      rep.valid = false;
      rep.message = "d^" + std::to_string(i) + " has twist " + std::to_string(d.twist()) + ", expected " +
                    std::to_string(want);
      return rep;
    }
    if (d.cols() != x.map((i + 1) % n).rows()) {
      rep.valid = false;
      rep.message = "d^" + std::to_string(i) + " has " + std::to_string(d.cols()) + " columns but X^" +
                    std::to_string((i + 1) % n) + " has rank " + std::to_string(x.map((i + 1) % n).rows());
      return rep;
    }
  }
  const Ring& R = x.ring();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<TwistedMatrix> seq;
    for (std::size_t k = 0; k < n; ++k) seq.push_back(x.map((i + k) % n));
    const TwistedMatrix rot = twisted_compose_all(R, seq, x.rank(i));
    const TwistedMatrix want = TwistedMatrix::omega_map(R, x.rank(i));
    if (rot != want) {
      rep.valid = false;
      rep.failing_rotation = i;
      rep.difference = rot.with_twist(1) - want;
      rep.message = "rotation " + std::to_string(i) + " composite is " + rot.to_string() + ", expected omega*I";
      return rep;
    }
  }
  rep.message = "valid";
  return rep;
}

void require_valid(const NFactorization& x, const char* where) {
  const auto rep = validate(x);
  require(rep.valid, ErrorKind::Precondition, std::string(where) + ": invalid factorization: " + rep.message);
}

TwistedMatrix compose_range(const NFactorization& x, long i, long j) {
  const long n = static_cast<long>(x.n());
  require(i >= 0 && i < n && j < n && j >= -1, ErrorKind::IndexOutOfRange, "compose_range indices");
  if (j < i) return TwistedMatrix::identity(x.ring(), x.rank(static_cast<std::size_t>(i)));
  std::vector<TwistedMatrix> seq;
  for (long k = i; k <= j; ++k) seq.push_back(x.map(static_cast<std::size_t>(k)));
  return twisted_compose_all(x.ring(), seq, 0);
}

// ---------------------------------------------------------------- morphisms

FactorMorphism::FactorMorphism(NFactorization source, NFactorization target, std::vector<TwistedMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
  require(source_.n() == target_.n(), ErrorKind::ShapeMismatch, "morphism between different fold counts");
  require(comps_.size() == source_.n(), ErrorKind::ShapeMismatch, "morphism needs one component per slot");
  require_same_ring(source_.ring(), target_.ring(), "morphism across rings");
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    require(comps_[i].rows() == source_.rank(i) && comps_[i].cols() == target_.rank(i), ErrorKind::ShapeMismatch,
            "morphism component " + std::to_string(i) + " has the wrong shape");
  }
}

bool FactorMorphism::operator==(const FactorMorphism& o) const {
  if (n() != o.n() || source_ != o.source_ || target_ != o.target_) return false;
  for (std::size_t i = 0; i < n(); ++i)
    if (comps_[i] != o.comps_[i]) return false;
  return true;
}

bool FactorMorphism::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

FactorMorphism FactorMorphism::operator+(const FactorMorphism& o) const {
  require(source_ == o.source_ && target_ == o.target_, ErrorKind::ShapeMismatch, "sum of non-parallel morphisms");
  std::vector<TwistedMatrix> c;
  for (std::size_t i = 0; i < n(); ++i) c.push_back(comps_[i] + o.comps_[i]);
  return FactorMorphism(source_, target_, std::move(c));
}

FactorMorphism FactorMorphism::operator-(const FactorMorphism& o) const { return *this + (-o); }

FactorMorphism FactorMorphism::operator-() const {
  std::vector<TwistedMatrix> c;
  for (const auto& m : comps_) c.push_back(-m);
  return FactorMorphism(source_, target_, std::move(c));
}

MorphismReport check_morphism(const FactorMorphism& f) {
  MorphismReport rep;
  const NFactorization& X = f.source();
  const NFactorization& Y = f.target();
  const std::size_t n = f.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.component(i).twist() != 0) {
      rep.valid = false;
      rep.message = "component " + std::to_string(i) + " must have twist 0";
      return rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    // f^{i+1} after d_X^i versus d_Y^i after f^i, both in application order.
    const TwistedMatrix lhs = twisted_compose(X.map(i), f.component(j));
    const TwistedMatrix rhs = twisted_compose(f.component(i), Y.map(i));
    if (lhs != rhs) {
      rep.valid = false;
      rep.failing_square = i;
      rep.message = "square " + std::to_string(i) + " does not commute";
      return rep;
    }
  }
  rep.message = "valid";
  return rep;
}

void require_morphism(const FactorMorphism& f, const char* where) {
  const auto rep = check_morphism(f);
  require(rep.valid, ErrorKind::Precondition, std::string(where) + ": not a morphism: " + rep.message);
}

FactorMorphism identity_morphism(const NFactorization& x) {
  std::vector<TwistedMatrix> c;
  for (std::size_t i = 0; i < x.n(); ++i) c.push_back(TwistedMatrix::identity(x.ring(), x.rank(i)));
  return FactorMorphism(x, x, std::move(c));
}

FactorMorphism zero_morphism(const NFactorization& x, const NFactorization& y) {
  std::vector<TwistedMatrix> c;
  for (std::size_t i = 0; i < x.n(); ++i) c.emplace_back(x.ring(), x.rank(i), y.rank(i));
  return FactorMorphism(x, y, std::move(c));
}

FactorMorphism compose(const FactorMorphism& f, const FactorMorphism& g) {
  require(f.target() == g.source(), ErrorKind::ShapeMismatch, "compose: target of f differs from source of g");
  std::vector<TwistedMatrix> c;
  for (std::size_t i = 0; i < f.n(); ++i) c.push_back(twisted_compose(f.component(i), g.component(i)));
  return FactorMorphism(f.source(), g.target(), std::move(c));
}

FactorMorphism scale_morphism(const FactorMorphism& f, const Poly& c) {
  std::vector<TwistedMatrix> out;
  for (const auto& m : f.components()) out.push_back(m.left_scale(c));
  return FactorMorphism(f.source(), f.target(), std::move(out));
}

// ------------------------------------------------------------- direct sums

NFactorization zero_object(const Ring& ring, std::size_t n) {
  std::vector<TwistedMatrix> maps;
  for (std::size_t i = 0; i < n; ++i) maps.emplace_back(ring, 0, 0, i + 1 == n ? 1 : 0);
  return NFactorization(ring, std::move(maps));
}

NFactorization direct_sum_object(const NFactorization& x, const NFactorization& y) {
  require(x.n() == y.n(), ErrorKind::ShapeMismatch, "direct sum of different fold counts");
  require_same_ring(x.ring(), y.ring(), "direct sum across rings");
  std::vector<TwistedMatrix> maps;
  for (std::size_t i = 0; i < x.n(); ++i) maps.push_back(TwistedMatrix::block_diag(x.map(i), y.map(i)));
  return NFactorization(x.ring(), std::move(maps));
}

NFactorization direct_sum_object(const std::vector<NFactorization>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "direct sum of nothing");
  NFactorization acc = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) acc = direct_sum_object(acc, parts[k]);
  return acc;
}

DirectSum direct_sum(const NFactorization& x, const NFactorization& y) {
  NFactorization s = direct_sum_object(x, y);
  const Ring& R = x.ring();
  std::vector<TwistedMatrix> il, ir, pl, pr;
  for (std::size_t i = 0; i < x.n(); ++i) {
    const std::size_t a = x.rank(i), b = y.rank(i);
    TwistedMatrix l(R, a, a + b), r(R, b, a + b);
    l.set_block(0, 0, TwistedMatrix::identity(R, a));
    r.set_block(0, a, TwistedMatrix::identity(R, b));
    TwistedMatrix lp(R, a + b, a), rp(R, a + b, b);
    lp.set_block(0, 0, TwistedMatrix::identity(R, a));
    rp.set_block(a, 0, TwistedMatrix::identity(R, b));
    il.push_back(l);
    ir.push_back(r);
    pl.push_back(lp);
    pr.push_back(rp);
  }
  return DirectSum{s, FactorMorphism(x, s, il), FactorMorphism(y, s, ir), FactorMorphism(s, x, pl),
                   FactorMorphism(s, y, pr)};
}

FactorMorphism direct_sum_morphism(const FactorMorphism& f, const FactorMorphism& g) {
  std::vector<TwistedMatrix> c;
  for (std::size_t i = 0; i < f.n(); ++i) c.push_back(TwistedMatrix::block_diag(f.component(i), g.component(i)));
  return FactorMorphism(direct_sum_object(f.source(), g.source()), direct_sum_object(f.target(), g.target()),
                        std::move(c));
}

// ------------------------------------------------------------------- shift

NFactorization twist_object(const NFactorization& x, long power) {
  std::vector<TwistedMatrix> maps;
  for (const auto& m : x.maps()) maps.push_back(twist_matrix(m, power));
  return NFactorization(x.ring(), std::move(maps));
}

FactorMorphism twist_morphism(const FactorMorphism& f, long power) {
  std::vector<TwistedMatrix> c;
  for (const auto& m : f.components()) c.push_back(twist_matrix(m, power));
  return FactorMorphism(twist_object(f.source(), power), twist_object(f.target(), power), std::move(c));
}

namespace {

NFactorization shift_once(const NFactorization& x) {
  const std::size_t n = x.n();
  if (n == 1) return NFactorization(x.ring(), {twist_matrix(x.map(0), -1)});
  std::vector<TwistedMatrix> maps;
  for (std::size_t i = 1; i + 1 < n; ++i) maps.push_back(x.map(i));
  maps.push_back(twist_matrix(x.map(n - 1), -1).with_twist(0));
  maps.push_back(x.map(0).with_twist(1));
  return NFactorization(x.ring(), std::move(maps));
}

NFactorization unshift_once(const NFactorization& x) {
  const std::size_t n = x.n();
  if (n == 1) return NFactorization(x.ring(), {twist_matrix(x.map(0), 1)});
  std::vector<TwistedMatrix> maps;
  maps.push_back(x.map(n - 1).with_twist(0));
  for (std::size_t i = 0; i + 2 < n; ++i) maps.push_back(x.map(i));
  maps.push_back(twist_matrix(x.map(n - 2), 1).with_twist(1));
  return NFactorization(x.ring(), std::move(maps));
}

std::vector<TwistedMatrix> shift_components(const std::vector<TwistedMatrix>& f) {
  std::vector<TwistedMatrix> c(f.begin() + 1, f.end());
  c.push_back(twist_matrix(f[0], -1));
  return c;
}

std::vector<TwistedMatrix> unshift_components(const std::vector<TwistedMatrix>& f) {
  std::vector<TwistedMatrix> c{twist_matrix(f.back(), 1)};
  c.insert(c.end(), f.begin(), f.end() - 1);
  return c;
}

}  // namespace

NFactorization shift(const NFactorization& x, long power) {
  NFactorization y = x;
  for (long k = 0; k < power; ++k) y = shift_once(y);
  for (long k = 0; k > power; --k) y = unshift_once(y);
  return y;
}

FactorMorphism shift(const FactorMorphism& f, long power) {
  std::vector<TwistedMatrix> c = f.components();
  for (long k = 0; k < power; ++k) c = shift_components(c);
  for (long k = 0; k > power; --k) c = unshift_components(c);
  return FactorMorphism(shift(f.source(), power), shift(f.target(), power), std::move(c));
}

// ------------------------------------------------------ trivial and faces

NFactorization module_object(const Ring& ring, std::size_t m) {
  return NFactorization(ring, {TwistedMatrix::omega_map(ring, m)});
}

NFactorization theta(const Ring& ring, std::size_t n, std::size_t i, std::size_t m) {
  require(n >= 1 && i < n, ErrorKind::IndexOutOfRange, "theta index must satisfy 0 <= i < n");
  const std::size_t omega_slot = (i + n - 1) % n;
  std::vector<TwistedMatrix> maps;
  for (std::size_t k = 0; k < n; ++k) {
    const long t = k + 1 == n ? 1 : 0;
    maps.push_back(k == omega_slot ? TwistedMatrix::scalar(ring, m, ring.omega(), t)
                                   : TwistedMatrix::identity(ring, m, t));
  }
  return NFactorization(ring, std::move(maps));
}

FactorMorphism theta(std::size_t n, std::size_t i, const TwistedMatrix& f) {
  require(f.twist() == 0, ErrorKind::Precondition, "theta on morphisms expects a twist-0 map");
  std::vector<TwistedMatrix> c;
  for (std::size_t k = 0; k < n; ++k) c.push_back(k < i ? twist_matrix(f, 1) : f);
  return FactorMorphism(theta(f.ring(), n, i, f.rows()), theta(f.ring(), n, i, f.cols()), std::move(c));
}

std::size_t projection(const NFactorization& x, std::size_t i) {
  require(i < x.n(), ErrorKind::IndexOutOfRange, "projection index");
  return x.rank(i);
}

TwistedMatrix projection(const FactorMorphism& f, std::size_t i) {
  require(i < f.n(), ErrorKind::IndexOutOfRange, "projection index");
  return f.component(i);
}

NFactorization face(const NFactorization& x, std::size_t i) {
  const std::size_t n = x.n();
  require(i <= n, ErrorKind::IndexOutOfRange, "face index must satisfy 0 <= i <= n");
  const Ring& R = x.ring();
  std::vector<TwistedMatrix> maps;
  if (i < n) {
    for (std::size_t k = 0; k < i; ++k) maps.push_back(x.map(k));
    maps.push_back(TwistedMatrix::identity(R, x.rank(i)));
    for (std::size_t k = i; k < n; ++k) maps.push_back(x.map(k));
  } else {
    for (std::size_t k = 0; k + 1 < n; ++k) maps.push_back(x.map(k));
    maps.push_back(twist_matrix(x.map(n - 1), -1).with_twist(0));
    maps.push_back(TwistedMatrix::identity(R, x.rank(0), 1));
  }
  return NFactorization(R, std::move(maps));
}

FactorMorphism face(const FactorMorphism& f, std::size_t i) {
  const std::size_t n = f.n();
  require(i <= n, ErrorKind::IndexOutOfRange, "face index must satisfy 0 <= i <= n");
  std::vector<TwistedMatrix> c = f.components();
  if (i < n) c.insert(c.begin() + static_cast<long>(i) + 1, f.component(i));
  else c.push_back(twist_matrix(f.component(0), -1));
  return FactorMorphism(face(f.source(), i), face(f.target(), i), std::move(c));
}

NFactorization degeneracy(const NFactorization& y, std::size_t i) {
  require(y.n() >= 2, ErrorKind::IndexOutOfRange, "degeneracy needs at least two maps");
  const std::size_t n = y.n() - 1;
  require(i <= n, ErrorKind::IndexOutOfRange, "degeneracy index must satisfy 0 <= i <= n");
  const Ring& R = y.ring();
  std::vector<TwistedMatrix> maps;
  if (i + 1 < n) {
    for (std::size_t k = 0; k < i; ++k) maps.push_back(y.map(k));
    maps.push_back(y.map(i).product(y.map(i + 1)));
    for (std::size_t k = i + 2; k <= n; ++k) maps.push_back(y.map(k));
  } else if (i + 1 == n) {
    for (std::size_t k = 0; k + 1 < n; ++k) maps.push_back(y.map(k));
    maps.push_back(twisted_compose(y.map(n - 1), y.map(n)));
  } else if (n == 1) {
    maps.push_back(twist_matrix(y.map(1).product(y.map(0)), 1).with_twist(1));
  } else {
    maps.push_back(y.map(n).product(y.map(0)).with_twist(0));
    for (std::size_t k = 1; k + 1 < n; ++k) maps.push_back(y.map(k));
    maps.push_back(twist_matrix(y.map(n - 1), 1).with_twist(1));
  }
  return NFactorization(R, std::move(maps));
}

FactorMorphism degeneracy(const FactorMorphism& g, std::size_t i) {
  require(g.n() >= 2, ErrorKind::IndexOutOfRange, "degeneracy needs at least two components");
  const std::size_t n = g.n() - 1;
  require(i <= n, ErrorKind::IndexOutOfRange, "degeneracy index must satisfy 0 <= i <= n");
  std::vector<TwistedMatrix> c;
  if (i < n) {
    c = g.components();
    c.erase(c.begin() + static_cast<long>(i) + 1);
  } else {
    c.push_back(twist_matrix(g.component(n), 1));
    for (std::size_t k = 1; k < n; ++k) c.push_back(g.component(k));
  }
  return FactorMorphism(degeneracy(g.source(), i), degeneracy(g.target(), i), std::move(c));
}

}  // namespace nfold
