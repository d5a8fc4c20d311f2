#include "nfold/field.hpp"

#include <algorithm>
#include <sstream>

#include "nfold/error.hpp"
#include "nfold/kernels.hpp"

namespace nfold {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Digits d(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits_raw(const Digits& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return static_cast<std::uint32_t>(code);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Product of two digit vectors modulo the monic modulus, over F_p.
Digits mul_mod_poly(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t k = 2 * e; k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t t = 0; t < e; ++t) prod[k - e + t] = (prod[k - e + t] + (p - c) * modulus[t]) % p;
  }
  Digits r(e);
  for (std::size_t i = 0; i < e; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

// True when the monic polynomial g (degree >= 1) divides f over F_p.
bool divides(Digits f, const Digits& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const std::uint64_t c = f[k];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dg; ++t)
      f[k - dg + t] = static_cast<std::uint32_t>((f[k - dg + t] + (p - c) * g[t]) % p);
  }
  return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

bool irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t c = 0; c < count; ++c) {
      Digits g = to_digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (divides(f, g, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::uint32_t p) {
  FieldSpec s;
  s.kind = FieldKind::Finite;
  s.p = p;
  s.e = 1;
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
  FieldSpec s;
  s.kind = FieldKind::Finite;
  s.p = p;
  s.e = e;
  s.modulus = std::move(modulus);
  return s;
}

Field::Field(const FieldSpec& spec) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  if (spec.kind == FieldKind::Finite) {
    const std::uint32_t p = spec.p, e = spec.e;
    require(is_prime_number(p), ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
    require(p <= kernels::kMaxModulus, ErrorKind::InvalidInput, "characteristic exceeds supported bound 65521");
    require(e >= 1, ErrorKind::InvalidInput, "extension degree must be positive");
    impl->q = ipow(p, e);
    if (e == 1) {
      impl->spec.modulus.clear();
    } else {
      require(impl->q <= (1U << 16), ErrorKind::InvalidInput, "extension fields are limited to 2^16 elements");
      auto& f = impl->spec.modulus;
      require(f.size() == e + 1 && f[e] == 1, ErrorKind::InvalidInput, "modulus must be monic of degree e");
      for (auto c : f) require(c < p, ErrorKind::InvalidInput, "modulus coefficient out of range");
      require(irreducible(f, p), ErrorKind::InvalidInput, "modulus is not irreducible over F_p");
      const std::uint32_t q = static_cast<std::uint32_t>(impl->q);
      // Find a primitive element and build log/exp tables.
      impl->exp.assign(q - 1, 0);
      impl->log.assign(q, 0);
      for (std::uint32_t g = 2; g < q; ++g) {
        const Digits gd = to_digits(g, p, e);
        Digits cur = to_digits(1, p, e);
        std::uint32_t order = 0;
        std::vector<char> seen(q, 0);
        bool ok = true;
        for (std::uint32_t k = 0; k < q - 1; ++k) {
          const std::uint32_t c = from_digits_raw(cur, p);
          if (seen[c]) {
            ok = false;
            break;
          }
          seen[c] = 1;
          impl->exp[k] = c;
          cur = mul_mod_poly(cur, gd, f, p);
          ++order;
        }
        if (ok && order == q - 1) break;
        require(g + 1 < q, ErrorKind::InvalidInput, "no primitive element found");
      }
      for (std::uint32_t k = 0; k < q - 1; ++k) impl->log[impl->exp[k]] = k;
      impl->frob.assign(q, 0);
      for (std::uint32_t a = 1; a < q; ++a)
        impl->frob[a] = impl->exp[(std::uint64_t(impl->log[a]) * p) % (q - 1)];
    }
  }
  impl_ = std::move(impl);
}

std::uint32_t Field::add_code(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = impl_->spec.p;
  if (impl_->spec.e == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p);
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t i = 0; i < impl_->spec.e; ++i) {
    r += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

std::uint32_t Field::neg_code(std::uint32_t a) const {
  const std::uint32_t p = impl_->spec.p;
  if (impl_->spec.e == 1) return a == 0 ? 0 : p - a;
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t i = 0; i < impl_->spec.e; ++i) {
    const std::uint32_t d = a % p;
    r += (d == 0 ? 0 : p - d) * place;
    a /= p;
    place *= p;
  }
  return r;
}

std::uint32_t Field::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (impl_->spec.e == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % impl_->spec.p);
  const std::uint64_t n = impl_->q - 1;
  return impl_->exp[(std::uint64_t(impl_->log[a]) + impl_->log[b]) % n];
}

std::uint32_t Field::inv_code(std::uint32_t a) const {
  require(a != 0, ErrorKind::DivisionByZero, "inverse of zero field element");
  if (impl_->spec.e == 1) return inv_mod(a, impl_->spec.p);
  const std::uint64_t n = impl_->q - 1;
  return impl_->exp[(n - impl_->log[a]) % n];
}

Scalar Field::zero() const { return is_rational() ? Scalar(mpq_class(0)) : Scalar(std::uint32_t{0}); }
Scalar Field::one() const { return is_rational() ? Scalar(mpq_class(1)) : Scalar(std::uint32_t{1}); }

Scalar Field::from_int(long v) const {
  if (is_rational()) return mpq_class(v);
  const long p = impl_->spec.p;
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

Scalar Field::from_code(std::uint32_t code) const {
  if (is_rational()) return mpq_class(code);
  require(code < impl_->q, ErrorKind::InvalidInput, "field element code out of range");
  return code;
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return q;
  mpz_class n = q.get_num(), d = q.get_den();
  const mpz_class p = impl_->spec.p;
  mpz_class nr = n % p, dr = d % p;
  if (nr < 0) nr += p;
  if (dr < 0) dr += p;
  require(dr != 0, ErrorKind::DivisionByZero, "denominator vanishes in the finite field");
  return mul(Scalar(static_cast<std::uint32_t>(nr.get_ui())), inv(Scalar(static_cast<std::uint32_t>(dr.get_ui()))));
}

bool Field::is_zero(const Scalar& a) const {
  if (is_rational()) return std::get<mpq_class>(a) == 0;
  return std::get<std::uint32_t>(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (is_rational()) return std::get<mpq_class>(a) == 1;
  return std::get<std::uint32_t>(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return std::get<mpq_class>(a) == std::get<mpq_class>(b);
  return std::get<std::uint32_t>(a) == std::get<std::uint32_t>(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  return add_code(std::get<std::uint32_t>(a), std::get<std::uint32_t>(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
  return add_code(std::get<std::uint32_t>(a), neg_code(std::get<std::uint32_t>(b)));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return mpq_class(-std::get<mpq_class>(a));
  return neg_code(std::get<std::uint32_t>(a));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  return mul_code(std::get<std::uint32_t>(a), std::get<std::uint32_t>(b));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_rational()) {
    const mpq_class& q = std::get<mpq_class>(a);
    require(q != 0, ErrorKind::DivisionByZero, "inverse of zero rational");
    return mpq_class(1 / q);
  }
  return inv_code(std::get<std::uint32_t>(a));
}

Scalar Field::frobenius(const Scalar& a, long power) const {
  if (is_rational() || impl_->spec.e == 1) return a;
  const long e = impl_->spec.e;
  long k = power % e;
  if (k < 0) k += e;
  std::uint32_t c = std::get<std::uint32_t>(a);
  for (long i = 0; i < k; ++i) c = impl_->frob[c];
  return c;
}

std::vector<std::uint32_t> Field::digits(const Scalar& a) const {
  require(is_finite(), ErrorKind::Unsupported, "digits of a rational");
  return to_digits(std::get<std::uint32_t>(a), impl_->spec.p, impl_->spec.e);
}

Scalar Field::from_digits(const std::vector<std::uint32_t>& d) const {
  require(is_finite(), ErrorKind::Unsupported, "digits of a rational");
  require(d.size() == impl_->spec.e, ErrorKind::InvalidInput, "wrong number of field digits");
  for (auto c : d) require(c < impl_->spec.p, ErrorKind::InvalidInput, "field digit out of range");
  return from_digits_raw(d, impl_->spec.p);
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
  if (is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, impl_->q - 1);
    return static_cast<std::uint32_t>(dist(rng));
  }
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  const int d = den(rng);
  // Mostly integers, occasionally a proper fraction.
  mpq_class q(num(rng), d <= 3 ? 1 : 2);
  q.canonicalize();
  return q;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rational()) return std::get<mpq_class>(a).get_str();
  if (impl_->spec.e == 1) return std::to_string(std::get<std::uint32_t>(a));
  const Digits d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 'u';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace nfold
