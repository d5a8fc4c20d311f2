#include "nfold/random.hpp"

#include <algorithm>

#include "nfold/error.hpp"

namespace nfold {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Scalar nonzero_scalar(const Field& F, std::mt19937_64& rng, bool fixed_by_phi) {
  for (;;) {
    Scalar c = F.random(rng);
    if (fixed_by_phi && F.is_finite()) c = F.from_int(static_cast<long>(rng() % F.characteristic()));
    if (!F.is_zero(c)) return c;
  }
}

// Exponent of each atom in a and the remaining constant.
std::pair<Scalar, std::vector<int>> atom_exponents(const Ring& R, Poly a, const std::vector<Poly>& atoms) {
  std::vector<int> e(atoms.size(), 0);
  for (std::size_t k = 0; k < atoms.size(); ++k)
    for (;;) {
      if (a.degree() < atoms[k].degree()) break;
      auto [q, r] = R.left_divmod(a, atoms[k]);
      if (!r.is_zero()) break;
      a = q;
      ++e[k];
    }
  require(a.degree() == 0, ErrorKind::Precondition, "seed entry is not a product of atoms");
  return {a.c[0], e};
}

Poly power_product(const Ring& R, const Scalar& c, const std::vector<Poly>& atoms, const std::vector<int>& e) {
  Poly p = R.constant(c);
  for (std::size_t k = 0; k < atoms.size(); ++k)
    for (int t = 0; t < e[k]; ++t) p = R.mul(p, atoms[k]);
  return p;
}

}  // namespace

OmegaAtoms omega_atoms(const Ring& R) {
  const Field& F = R.field();
  Poly rest = R.omega();
  const Scalar lead = R.lead(rest);
  rest = R.scale(F.inv(lead), rest);
  OmegaAtoms out{lead, {}};
  std::vector<Poly> candidates{R.x_pow(1)};
  if (R.is_commutative()) {
    if (F.is_finite()) {
      for (std::uint32_t a = 1; a < F.order() && a < 64; ++a)
        candidates.push_back(R.sub(R.x_pow(1), R.constant(F.from_code(a))));
    } else {
      for (long a : {1L, -1L, 2L, -2L, 3L, -3L}) candidates.push_back(R.sub(R.x_pow(1), R.constant(F.from_int(a))));
    }
  }
  for (const auto& c : candidates)
    for (;;) {
      if (rest.degree() < 1) break;
      auto [q, r] = R.left_divmod(rest, c);
      if (!r.is_zero()) break;
      out.atoms.push_back(c);
      rest = q;
    }
  if (rest.degree() > 0) out.atoms.push_back(rest);
  return out;
}

std::vector<Poly> random_seed(const Ring& R, std::mt19937_64& rng, std::size_t n) {
  const OmegaAtoms oa = omega_atoms(R);
  std::vector<Poly> d(n, R.one());
  d[pick(rng, n)] = R.constant(oa.lead);
  for (const auto& a : oa.atoms) {
    const std::size_t s = pick(rng, n);
    d[s] = R.mul(d[s], a);
  }
  return d;
}

NFactorization seed_object(const Ring& R, const std::vector<std::vector<Poly>>& seeds) {
  require(!seeds.empty(), ErrorKind::InvalidInput, "seed_object needs at least one seed");
  const std::size_t n = seeds[0].size(), r = seeds.size();
  std::vector<TwistedMatrix> maps;
  for (std::size_t i = 0; i < n; ++i) {
    TwistedMatrix m(R, r, r, i + 1 == n ? 1 : 0);
    for (std::size_t s = 0; s < r; ++s) m.at(s, s) = seeds[s][i];
    maps.push_back(std::move(m));
  }
  return NFactorization(R, std::move(maps));
}

std::pair<TwistedMatrix, TwistedMatrix> random_unimodular(const Ring& R, std::mt19937_64& rng, std::size_t r,
                                                         int steps, int deg) {
  TwistedMatrix g = TwistedMatrix::identity(R, r), ginv = TwistedMatrix::identity(R, r);
  const Field& F = R.field();
  for (int s = 0; s < steps; ++s) {
    TwistedMatrix e = TwistedMatrix::identity(R, r), einv = TwistedMatrix::identity(R, r);
    if (r >= 2 && rng() % 4 != 0) {
      const std::size_t i = pick(rng, r);
      std::size_t j = pick(rng, r - 1);
      if (j >= i) ++j;
      const Poly c = R.random(rng, deg);
      e.at(i, j) = c;
      einv.at(i, j) = R.neg(c);
    } else {
      const std::size_t i = pick(rng, r);
      const Scalar u = nonzero_scalar(F, rng, false);
      e.at(i, i) = R.constant(u);
      einv.at(i, i) = R.constant(F.inv(u));
    }
    g = g.product(e);
    ginv = einv.product(ginv);
  }
  return {g, ginv};
}

SeededObject random_seeded(const Ring& R, std::mt19937_64& rng, const RandomBounds& b) {
  const std::size_t n = b.n;
  const std::size_t r = 1 + pick(rng, std::max<std::size_t>(b.max_rank, 1));
  std::vector<std::vector<Poly>> seeds;
  for (std::size_t s = 0; s < r; ++s) seeds.push_back(random_seed(R, rng, n));
  const NFactorization base = seed_object(R, seeds);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<TwistedMatrix> g, ginv;
    for (std::size_t i = 0; i < n; ++i) {
      auto [u, v] = random_unimodular(R, rng, r, 1 + static_cast<int>(pick(rng, 3)), 1);
      g.push_back(u);
      ginv.push_back(v);
    }
    std::vector<TwistedMatrix> maps;
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      maps.push_back(twisted_compose_all(R, {ginv[i], base.map(i), g[(i + 1) % n]}, r));
      deg = std::max(deg, maps.back().max_degree());
    }
    if (deg > b.max_deg) continue;
    NFactorization obj(R, std::move(maps));
    FactorMorphism iso(base, obj, g), iso_inv(obj, base, ginv);
    return SeededObject{obj, base, seeds, iso, iso_inv};
  }
  return SeededObject{base, base, seeds, identity_morphism(base), identity_morphism(base)};
}

NFactorization random_factorization(const Ring& R, std::mt19937_64& rng, const RandomBounds& b) {
  return random_seeded(R, rng, b).object;
}

namespace {

// Diagonal morphism between rank-one seeds a -> b, or nullopt when the
// required degree exceeds the cap.
std::vector<Poly> seed_morphism(const Ring& R, const std::vector<Poly>& a, const std::vector<Poly>& b,
                                std::mt19937_64& rng) {
  const OmegaAtoms oa = omega_atoms(R);
  const std::size_t n = a.size();
  std::vector<std::pair<Scalar, std::vector<int>>> ea, eb;
  for (std::size_t i = 0; i < n; ++i) {
    ea.push_back(atom_exponents(R, a[i], oa.atoms));
    eb.push_back(atom_exponents(R, b[i], oa.atoms));
  }
  const Field& F = R.field();
  std::vector<std::vector<int>> e(n, std::vector<int>(oa.atoms.size(), 0));
  for (std::size_t k = 0; k < oa.atoms.size(); ++k) {
    int prefix = 0, low = 0;
    std::vector<int> pre(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      pre[i] = prefix;
      low = std::min(low, prefix);
      prefix += eb[i].second[k] - ea[i].second[k];
    }
    const int e0 = -low + (pick(rng, 4) == 0 ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) e[i][k] = e0 + pre[i];
  }
  std::vector<Poly> p;
  Scalar c = nonzero_scalar(F, rng, true);
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(power_product(R, c, oa.atoms, e[i]));
    c = F.div(F.mul(c, eb[i].first), ea[i].first);
  }
  return p;
}

}  // namespace

FactorMorphism random_morphism(const SeededObject& x, const SeededObject& y, std::mt19937_64& rng) {
  const Ring& R = x.object.ring();
  const std::size_t n = x.object.n();
  const std::size_t rx = x.seeds.size(), ry = y.seeds.size();
  std::vector<TwistedMatrix> comps(n, TwistedMatrix(R, rx, ry));
  for (std::size_t s = 0; s < rx; ++s)
    for (std::size_t t = 0; t < ry; ++t) {
      if (rng() % 4 == 0) continue;
      const auto p = seed_morphism(R, x.seeds[s], y.seeds[t], rng);
      for (std::size_t i = 0; i < n; ++i) comps[i].at(s, t) = p[i];
    }
  FactorMorphism f(x.seed_sum, y.seed_sum, std::move(comps));
  require_morphism(f, "random_morphism");
  return compose(compose(x.iso_inv, f), y.iso);
}

HomotopyWitness random_witness(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng, int deg) {
  const Ring& R = x.ring();
  HomotopyWitness w;
  for (const auto& s : witness_shapes(x, y)) {
    TwistedMatrix m(R, s.rows, s.cols, s.twist);
    for (std::size_t i = 0; i < s.rows; ++i)
      for (std::size_t j = 0; j < s.cols; ++j)
        if (rng() % 2 == 0) m.at(i, j) = R.random(rng, deg);
    w.h.push_back(std::move(m));
  }
  return w;
}

FactorMorphism random_null_homotopic(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng,
                                     int deg) {
  return reconstruct_from_witness(x, y, random_witness(x, y, rng, deg));
}

ChainModule random_chain(const Ring& R, std::mt19937_64& rng, std::size_t len, std::size_t max_summands) {
  if (len == 0) return ChainModule(R, {}, {});
  const OmegaAtoms oa = omega_atoms(R);
  const std::size_t k = 1 + pick(rng, std::max<std::size_t>(max_summands, 1));
  TwistedMatrix diag(R, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Poly e = R.one();
    bool any = false;
    for (const auto& a : oa.atoms)
      if (rng() % 2 == 0) {
        e = R.mul(e, a);
        any = true;
      }
    if (!any) e = oa.atoms[pick(rng, oa.atoms.size())];
    diag.at(j, j) = e;
  }
  auto [u, uinv] = random_unimodular(R, rng, k, 1 + static_cast<int>(pick(rng, 2)), 1);
  auto [v, vinv] = random_unimodular(R, rng, k, 1 + static_cast<int>(pick(rng, 2)), 1);
  (void)uinv;
  (void)vinv;
  std::vector<ModulePresentation> mods(len, ModulePresentation(0, TwistedMatrix(R, 0, 0)));
  std::vector<TwistedMatrix> maps(len - 1, TwistedMatrix(R, 0, 0));
  mods[len - 1] = ModulePresentation(k, u.product(diag).product(v));
  const int below = std::max(R.omega_degree() - 1, 0);
  for (std::size_t i = len - 1; i-- > 0;) {
    const ModulePresentation& above = mods[i + 1];
    const std::size_t h = 1 + pick(rng, std::max<std::size_t>(above.generators, 1));
    TwistedMatrix y(R, h, above.generators);
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t c = 0; c < above.generators; ++c)
        if (rng() % 3 != 0) y.at(a, c) = R.random(rng, below);
    TwistedMatrix rel(R, 0, h);
    const TwistedMatrix stacked = above.relations.rows() == 0 ? y : TwistedMatrix::vstack({y, above.relations});
    if (above.generators == 0) {
      rel = TwistedMatrix::identity(R, h);
    } else {
      const TwistedMatrix ker = left_kernel(stacked);
      if (ker.rows() > 0) {
        const HermiteResult hf = hermite_form(ker.block(0, 0, ker.rows(), h));
        rel = hf.h.block(0, 0, hf.rank(), h);
      }
    }
    mods[i] = ModulePresentation(h, rel);
    maps[i] = y;
  }
  return ChainModule(R, std::move(mods), std::move(maps));
}

}  // namespace nfold
