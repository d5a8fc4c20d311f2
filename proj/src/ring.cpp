#include "nfold/ring.hpp"

#include <sstream>

#include "nfold/error.hpp"

namespace nfold {

Ring::Ring(Field field, long phi_power, std::vector<Scalar> omega) {
  auto impl = std::make_shared<Impl>();
  impl->field = std::move(field);
  const Field& f = impl->field;
  long e = f.is_finite() ? static_cast<long>(f.degree()) : 1;
  require(phi_power >= 0, ErrorKind::InvalidInput, "sigma_power must be non-negative");
  if (f.is_rational()) require(phi_power == 0, ErrorKind::InvalidInput, "the rationals have no nontrivial Frobenius");
  require(phi_power < e || e == 1, ErrorKind::InvalidInput, "sigma_power must be below the extension degree");
  impl->phi_power = e == 1 ? 0 : phi_power % e;
  impl->commutative = impl->phi_power == 0;
  impl_ = impl;
  Poly w = from_coeffs(std::move(omega));
  require(!w.is_zero(), ErrorKind::InvalidInput, "omega must be nonzero");
  impl->omega = w;
  if (!impl->commutative) {
    for (int i = 0; i < w.degree(); ++i)
      require(f.is_zero(w.c[i]), ErrorKind::InvalidInput,
              "in a skew ring omega must be a monomial c*x^m to be normal");
    const Scalar& c = w.c.back();
    require(f.equal(f.frobenius(c, impl->phi_power), c), ErrorKind::InvalidInput,
            "omega's leading coefficient must be fixed by the skew map");
  }
  // Normality on generators: omega*g = sigma(g)*omega for g = x and a field generator.
  std::vector<Poly> gens{x_pow(1)};
  if (f.is_finite() && f.degree() > 1) gens.push_back(constant(f.from_code(f.characteristic())));
  for (const Poly& g : gens)
    require(equal(mul(w, g), mul(apply_sigma(g, 1), w)), ErrorKind::InvalidInput, "omega is not normal");
  require(equal(apply_sigma(w, 1), w), ErrorKind::InvalidInput, "sigma(omega) != omega");
}

bool Ring::same_as(const Ring& o) const {
  if (impl_ == o.impl_) return true;
  return field() == o.field() && phi_power() == o.phi_power() && equal(omega(), o.omega());
}

void Ring::trim(Poly& a) const {
  while (!a.c.empty() && field().is_zero(a.c.back())) a.c.pop_back();
}

Poly Ring::one() const { return constant(field().one()); }

Poly Ring::constant(const Scalar& c) const {
  Poly p;
  if (!field().is_zero(c)) p.c.push_back(c);
  return p;
}

Poly Ring::monomial(const Scalar& c, int k) const {
  Poly p;
  if (field().is_zero(c)) return p;
  p.c.assign(static_cast<std::size_t>(k) + 1, field().zero());
  p.c.back() = c;
  return p;
}

Poly Ring::from_coeffs(std::vector<Scalar> c) const {
  Poly p{std::move(c)};
  trim(p);
  return p;
}

Poly Ring::from_ints(const std::vector<long>& c) const {
  Poly p;
  for (long v : c) p.c.push_back(field().from_int(v));
  trim(p);
  return p;
}

bool Ring::equal(const Poly& a, const Poly& b) const {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!field().equal(a.c[i], b.c[i])) return false;
  return true;
}

bool Ring::is_one(const Poly& a) const { return a.c.size() == 1 && field().is_one(a.c[0]); }

Poly Ring::add(const Poly& a, const Poly& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Field& f = field();
  Poly r;
  const std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c.size()) r.c.push_back(b.c[i]);
    else if (i >= b.c.size()) r.c.push_back(a.c[i]);
    else r.c.push_back(f.add(a.c[i], b.c[i]));
  }
  trim(r);
  return r;
}

Poly Ring::neg(const Poly& a) const {
  Poly r;
  r.c.reserve(a.c.size());
  for (const auto& v : a.c) r.c.push_back(field().neg(v));
  return r;
}

Poly Ring::sub(const Poly& a, const Poly& b) const {
  if (b.is_zero()) return a;
  return add(a, neg(b));
}

Poly Ring::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Field& f = field();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  if (is_commutative()) {
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (f.is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (!f.is_zero(b.c[j])) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    }
  } else {
    // a_i x^i * b_j x^j = a_i phi^i(b_j) x^(i+j)
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (f.is_zero(a.c[i])) continue;
      const long pw = phi_power() * static_cast<long>(i);
      for (std::size_t j = 0; j < b.c.size(); ++j)
        if (!f.is_zero(b.c[j])) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], f.frobenius(b.c[j], pw)));
    }
  }
  trim(r);
  return r;
}

Poly Ring::scale(const Scalar& c, const Poly& a) const {
  if (field().is_zero(c)) return {};
  Poly r;
  r.c.reserve(a.c.size());
  for (const auto& v : a.c) r.c.push_back(field().mul(c, v));
  return r;
}

Poly Ring::apply_phi(const Poly& a, long power) const {
  if (is_commutative()) return a;
  Poly r;
  r.c.reserve(a.c.size());
  for (const auto& v : a.c) r.c.push_back(field().frobenius(v, phi_power() * power));
  return r;
}

Scalar Ring::sigma_coeff(const Scalar& c, long power) const {
  if (is_commutative()) return c;
  return field().frobenius(c, phi_power() * omega_degree() * power);
}

Poly Ring::apply_sigma(const Poly& a, long power) const {
  if (is_commutative()) return a;
  Poly r;
  r.c.reserve(a.c.size());
  for (const auto& v : a.c) r.c.push_back(sigma_coeff(v, power));
  return r;
}

std::pair<Poly, Poly> Ring::left_divmod(const Poly& a, const Poly& b) const {
  require(!b.is_zero(), ErrorKind::DivisionByZero, "left division by the zero polynomial");
  const Field& f = field();
  const int db = b.degree();
  Poly r = a;
  if (r.degree() < db) return {Poly{}, r};
  Poly q;
  q.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, f.zero());
  const Scalar& bl = b.c.back();
  while (!r.is_zero() && r.degree() >= db) {
    const int d = r.degree() - db;
    // (c x^d) * b has leading coefficient c * phi^d(lead b).
    const Scalar c = f.div(r.c.back(), f.frobenius(bl, phi_power() * d));
    q.c[d] = c;
    const long pw = phi_power() * d;
    for (int j = 0; j <= db; ++j) {
      const Scalar& bj = b.c[j];
      if (f.is_zero(bj)) continue;
      Scalar& slot = r.c[static_cast<std::size_t>(d + j)];
      slot = f.sub(slot, f.mul(c, is_commutative() ? bj : f.frobenius(bj, pw)));
    }
    trim(r);
  }
  trim(q);
  return {q, r};
}

Scalar Ring::monic_factor(const Poly& a) const { return field().inv(lead(a)); }

Poly Ring::random(std::mt19937_64& rng, int max_degree, int coeff_bound) const {
  if (max_degree < 0) return {};
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  Poly p;
  for (int i = 0; i <= d; ++i) p.c.push_back(field().random(rng, coeff_bound));
  trim(p);
  return p;
}

std::string Ring::to_string(const Poly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (field().is_zero(a.c[i])) continue;
    std::string coef = field().to_string(a.c[i]);
    const bool compound = coef.find_first_of("+u") != std::string::npos && i > 0;
    if (!first) os << " + ";
    first = false;
    if (i == 0) os << coef;
    else {
      if (!field().is_one(a.c[i])) os << (compound ? "(" + coef + ")" : coef) << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

RingSpec Ring::spec() const { return RingSpec{field().spec(), phi_power(), omega().c}; }

RingElem operator+(const RingElem& a, const RingElem& b) {
  require(a.ring.same_as(b.ring), ErrorKind::IncompatibleRing, "ring_add across different rings");
  return {a.ring, a.ring.add(a.value, b.value)};
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require(a.ring.same_as(b.ring), ErrorKind::IncompatibleRing, "ring_mul across different rings");
  return {a.ring, a.ring.mul(a.value, b.value)};
}

}  // namespace nfold
