#include "nfold/cok_bridge.hpp"

#include <algorithm>
#include <random>

#include "nfold/error.hpp"

namespace nfold {

namespace {

std::vector<TwistedMatrix> path(const NFactorization& x, std::size_t from, std::size_t to_excl) {
  std::vector<TwistedMatrix> seq;
  for (std::size_t k = from; k < to_excl; ++k) seq.push_back(x.map(k));
  return seq;
}

}  // namespace

GammaModuleData phi(const NFactorization& x) {
  require_valid(x, "phi");
  const std::size_t n = x.n();
  const Ring& R = x.ring();
  GammaModuleData g{R, n, {}, {}};
  for (std::size_t i = 1; i <= n; ++i) g.ranks.push_back(x.rank(n - i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) {
        g.maps.push_back(TwistedMatrix::identity(R, g.ranks[i - 1]));
      } else if (i < j) {
        g.maps.push_back(compose_range(x, static_cast<long>(n - j), static_cast<long>(n - i - 1)));
      } else {
        // X^{n-j} -> X^{n-1} -> sigma(X^0) -> sigma(X^{n-i})
        auto seq = path(x, n - j, n);
        for (auto& m : path(x, 0, n - i)) seq.push_back(m);
        g.maps.push_back(twisted_compose_all(R, seq, 0));
      }
    }
  return g;
}

GammaReport check_gamma(const GammaModuleData& g) {
  const std::size_t n = g.n;
  auto fail_with = [](std::string m) { return GammaReport{false, std::move(m)}; };
  if (g.ranks.size() != n || g.maps.size() != n * n) return fail_with("wrong number of components or maps");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const TwistedMatrix& m = g.f(i, j);
      const std::string tag = "f(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!m.ring().same_as(g.ring)) return fail_with(tag + " lives over another ring");
      if (m.rows() != g.ranks[j - 1] || m.cols() != g.ranks[i - 1]) return fail_with(tag + " has the wrong shape");
      if (m.twist() != (j < i ? 1 : 0)) return fail_with(tag + " has the wrong twist");
      if (i == j && m != TwistedMatrix::identity(g.ring, g.ranks[i - 1]))
        return fail_with(tag + " is not the identity");
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        const TwistedMatrix c = twisted_compose(g.f(j, k), g.f(i, j));
        const TwistedMatrix& direct = g.f(i, k);
        const long extra = c.twist() - direct.twist();
        TwistedMatrix expect = direct;
        if (extra == 1) expect = twisted_compose(TwistedMatrix::omega_map(g.ring, g.ranks[k - 1]), direct);
        if (extra < 0 || extra > 1 || c != expect)
          return fail_with("composition law fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
      }
  return {};
}

NFactorization psi(const GammaModuleData& g) {
  const GammaReport rep = check_gamma(g);
  require(rep.ok, ErrorKind::InvalidInput, "psi: " + rep.message);
  const std::size_t n = g.n;
  if (n == 1) return NFactorization(g.ring, {TwistedMatrix::omega_map(g.ring, g.ranks[0])});
  std::vector<TwistedMatrix> d;
  for (std::size_t k = 0; k + 1 < n; ++k) d.push_back(g.f(n - k - 1, n - k));
  d.push_back(g.f(n, 1));
  return NFactorization(g.ring, std::move(d));
}

std::vector<TwistedMatrix> phi(const FactorMorphism& f) {
  const std::size_t n = f.n();
  std::vector<TwistedMatrix> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(f.component(n - i));
  return out;
}

FactorMorphism psi(const GammaModuleData& source, const GammaModuleData& target,
                   const std::vector<TwistedMatrix>& components) {
  const std::size_t n = source.n;
  require(components.size() == n && target.n == n, ErrorKind::ShapeMismatch, "psi: component count");
  std::vector<TwistedMatrix> comps;
  for (std::size_t k = 0; k < n; ++k) comps.push_back(components[n - 1 - k]);
  return FactorMorphism(psi(source), psi(target), std::move(comps));
}

ChainModule::ChainModule(Ring ring, std::vector<ModulePresentation> modules, std::vector<TwistedMatrix> maps)
    : ring_(std::move(ring)), modules_(std::move(modules)), maps_(std::move(maps)) {
  require(maps_.size() + 1 == std::max<std::size_t>(modules_.size(), 1), ErrorKind::ShapeMismatch,
          "a chain of m modules needs m-1 maps");
  for (const auto& m : modules_) {
    require(m.ring().same_as(ring_), ErrorKind::IncompatibleRing, "chain module over another ring");
    lins_.push_back(k_linearize(m));
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    require(map_well_defined(modules_[i], lins_[i + 1], maps_[i]), ErrorKind::InvalidInput,
            "chain map " + std::to_string(i + 1) + " does not respect relations");
    linear_.push_back(linear_map(lins_[i], lins_[i + 1], maps_[i]));
  }
}

std::vector<std::size_t> ChainModule::dims() const {
  std::vector<std::size_t> d;
  for (const auto& l : lins_) d.push_back(l.dim());
  return d;
}

ChainModule cok0(const NFactorization& x) {
  require_valid(x, "cok0");
  const std::size_t n = x.n();
  std::vector<ModulePresentation> mods;
  std::vector<TwistedMatrix> maps;
  for (std::size_t i = 1; i < n; ++i) {
    mods.emplace_back(x.rank(i), compose_range(x, 0, static_cast<long>(i) - 1).with_twist(0));
    require(mods.back().is_omega_torsion(), ErrorKind::Precondition, "cokernel is not omega-torsion");
    if (i + 1 < n) maps.push_back(x.map(i));
  }
  return ChainModule(x.ring(), std::move(mods), std::move(maps));
}

std::vector<TwistedMatrix> cok0(const FactorMorphism& f) {
  std::vector<TwistedMatrix> out;
  for (std::size_t i = 1; i < f.n(); ++i) out.push_back(f.component(i));
  return out;
}

LinearChainMap linear_chain_map(const ChainModule& src, const ChainModule& dst,
                                const std::vector<TwistedMatrix>& generator_images) {
  require(src.length() == dst.length() && generator_images.size() == src.length(), ErrorKind::ShapeMismatch,
          "chain map length");
  LinearChainMap out;
  for (std::size_t i = 0; i < src.length(); ++i) {
    require(map_well_defined(src.module(i), dst.lin(i), generator_images[i]), ErrorKind::InvalidInput,
            "chain map component does not respect relations");
    out.push_back(linear_map(src.lin(i), dst.lin(i), generator_images[i]));
  }
  return out;
}

bool is_chain_map(const ChainModule& src, const ChainModule& dst, const LinearChainMap& m) {
  if (m.size() != src.length() || dst.length() != src.length()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto &a = src.lin(i), &b = dst.lin(i);
    if (m[i].rows() != a.dim() || m[i].cols() != b.dim()) return false;
    if (!(a.x_action() * m[i] == m[i] * b.x_action())) return false;
    for (std::size_t s = 0; s < a.scalar_actions().size(); ++s)
      if (!(a.scalar_actions()[s] * m[i] == m[i] * b.scalar_actions()[s])) return false;
  }
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!(src.linear(i) * m[i + 1] == m[i] * dst.linear(i))) return false;
  return true;
}

bool is_zero_chain_map(const LinearChainMap& m) {
  for (const auto& c : m)
    if (!c.is_zero()) return false;
  return true;
}

MonoReport chain_is_mono(const ChainModule& c) {
  for (std::size_t i = 0; i < c.maps().size(); ++i)
    if (rank(c.linear(i)) != c.lin(i).dim()) return {false, i + 1};
  return {};
}

namespace {

// Matrix of left multiplication by p on linear coordinates.
class ActionTable {
 public:
  explicit ActionTable(const KLinearization& l) : lin_(l) {
    const Field& F = l.base_field();
    xpow_.push_back(KMatrix::identity(F, l.dim()));
    if (!l.scalar_actions().empty()) {
      upow_.push_back(KMatrix::identity(F, l.dim()));
      for (std::size_t b = 1; b < l.ring().field().degree(); ++b) upow_.push_back(upow_.back() * l.scalar_actions()[0]);
    }
  }

  KMatrix operator()(const Poly& p) {
    const Field& F = lin_.base_field();
    KMatrix out(F, lin_.dim(), lin_.dim());
    for (std::size_t a = 0; a < p.c.size(); ++a) {
      if (lin_.ring().field().is_zero(p.c[a])) continue;
      while (xpow_.size() <= a) xpow_.push_back(xpow_.back() * lin_.x_action());
      out = out + xpow_[a] * coefficient(p.c[a]);
    }
    return out;
  }

 private:
  const KLinearization& lin_;
  std::vector<KMatrix> xpow_, upow_;

  KMatrix coefficient(const Scalar& c) {
    const Field& F = lin_.base_field();
    if (upow_.empty()) return KMatrix::identity(F, lin_.dim()).scaled(c);
    KMatrix out(F, lin_.dim(), lin_.dim());
    const auto d = lin_.ring().field().digits(c);
    for (std::size_t b = 0; b < d.size(); ++b)
      if (d[b] != 0) out = out + upow_[b].scaled(F.from_code(d[b]));
    return out;
  }
};

// Basis of Hom(M, N) as linear maps, built from generator images y_j in N
// subject to sum_j r_j * y_j = 0 for every relation row r.
std::vector<KMatrix> hom_basis(const ModulePresentation& m, const KLinearization& lm, const KLinearization& ln) {
  const Field& F = ln.base_field();
  const std::size_t g = m.generators, dn = ln.dim();
  if (g == 0 || dn == 0 || lm.dim() == 0) return {};
  ActionTable act(ln);
  const std::size_t nrel = m.relations.rows();
  KMatrix eq(F, nrel * dn, g * dn);
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t j = 0; j < g; ++j) {
      if (m.relations.at(r, j).is_zero()) continue;
      const KMatrix a = act(m.relations.at(r, j));
      for (std::size_t c = 0; c < dn; ++c)
        for (std::size_t c2 = 0; c2 < dn; ++c2) eq.at(r * dn + c2, j * dn + c) = a.at(c, c2);
    }
  const KMatrix kern = nrel == 0 ? KMatrix::identity(F, g * dn) : right_kernel(eq);
  // Linear map of basis vector b of M: decode to generator coordinates v,
  // then sum_j y_j * act(v_j).
  std::vector<std::vector<KMatrix>> decoded;  // decoded[b][j] = act(v_j)
  for (std::size_t b = 0; b < lm.dim(); ++b) {
    KMatrix unit(F, 1, lm.dim());
    unit.at(0, b) = F.one();
    const TwistedMatrix v = lm.decode(unit);
    std::vector<KMatrix> row;
    for (std::size_t j = 0; j < g; ++j) row.push_back(act(v.at(0, j)));
    decoded.push_back(std::move(row));
  }
  std::vector<KMatrix> out;
  for (std::size_t k = 0; k < kern.rows(); ++k) {
    KMatrix lin(F, lm.dim(), dn);
    for (std::size_t b = 0; b < lm.dim(); ++b) {
      KMatrix row(F, 1, dn);
      for (std::size_t j = 0; j < g; ++j) row = row + kern.block(k, j * dn, 1, dn) * decoded[b][j];
      lin.set_block(b, 0, row);
    }
    out.push_back(std::move(lin));
  }
  return out;
}

void flatten_into(KMatrix& col, std::size_t c, std::size_t& pos, const KMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) col.at(pos++, c) = m.at(i, j);
}

}  // namespace

std::vector<LinearChainMap> chain_map_basis(const ChainModule& c, const ChainModule& d) {
  require(c.length() == d.length(), ErrorKind::ShapeMismatch, "chains of different lengths");
  const std::size_t len = c.length();
  if (len == 0) return {};
  const Field F = linearization_field(c.ring());
  std::vector<std::vector<KMatrix>> hb;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    hb.push_back(hom_basis(c.module(i), c.lin(i), d.lin(i)));
    offset.push_back(total);
    total += hb.back().size();
  }
  if (total == 0) return {};
  std::size_t neq = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) neq += c.lin(i).dim() * d.lin(i + 1).dim();
  KMatrix eq(F, neq, total);
  std::size_t base = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    for (std::size_t k = 0; k < hb[i + 1].size(); ++k) {
      std::size_t pos = base;
      flatten_into(eq, offset[i + 1] + k, pos, c.linear(i) * hb[i + 1][k]);
    }
    for (std::size_t k = 0; k < hb[i].size(); ++k) {
      std::size_t pos = base;
      flatten_into(eq, offset[i] + k, pos, (hb[i][k] * d.linear(i)).scaled(F.from_int(-1)));
    }
    base += c.lin(i).dim() * d.lin(i + 1).dim();
  }
  const KMatrix kern = neq == 0 ? KMatrix::identity(F, total) : right_kernel(eq);
  std::vector<LinearChainMap> out;
  for (std::size_t r = 0; r < kern.rows(); ++r) {
    LinearChainMap m;
    for (std::size_t i = 0; i < len; ++i) {
      KMatrix acc(F, c.lin(i).dim(), d.lin(i).dim());
      for (std::size_t k = 0; k < hb[i].size(); ++k) {
        const Scalar& a = kern.at(r, offset[i] + k);
        if (!F.is_zero(a)) acc = acc + hb[i][k].scaled(a);
      }
      m.push_back(std::move(acc));
    }
    out.push_back(std::move(m));
  }
  return out;
}

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not-isomorphic";
    case IsoVerdict::NotFound: return "not-found";
  }
  return "?";
}

namespace {

std::vector<int> nonunit_degrees(const KLinearization& lin) {
  std::vector<int> out;
  for (int d : lin.factor_degrees())
    if (d > 0) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ChainIsoResult chain_iso(const ChainModule& c, const ChainModule& d, std::uint64_t seed, int budget) {
  ChainIsoResult res;
  if (c.length() != d.length()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "different lengths";
    return res;
  }
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (c.lin(i).dim() != d.lin(i).dim()) {
      res.verdict = IsoVerdict::NotIsomorphic;
      res.reason = "dimension differs at module " + std::to_string(i + 1);
      return res;
    }
    auto fc = nonunit_degrees(c.lin(i)), fd = nonunit_degrees(d.lin(i));
    if (c.lin(i).method() == LinearizationMethod::Smith && d.lin(i).method() == LinearizationMethod::Smith &&
        fc != fd) {
      res.verdict = IsoVerdict::NotIsomorphic;
      res.reason = "invariant factors differ at module " + std::to_string(i + 1);
      return res;
    }
  }
  const Field F = linearization_field(c.ring());
  const auto dims = c.dims();
  if (std::all_of(dims.begin(), dims.end(), [](std::size_t v) { return v == 0; })) {
    for (std::size_t i = 0; i < c.length(); ++i) {
      res.forward.emplace_back(F, 0, 0);
      res.backward.emplace_back(F, 0, 0);
    }
    res.verdict = IsoVerdict::Isomorphic;
    return res;
  }
  const auto basis = chain_map_basis(c, d);
  if (basis.empty()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "no nonzero chain maps";
    return res;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    LinearChainMap g;
    for (std::size_t i = 0; i < c.length(); ++i) g.emplace_back(F, c.lin(i).dim(), d.lin(i).dim());
    for (const auto& b : basis) {
      const Scalar a = F.is_rational() ? F.from_int(static_cast<long>(rng() % 19) - 9) : F.random(rng);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = g[i] + b[i].scaled(a);
    }
    LinearChainMap h;
    bool ok = true;
    for (const auto& gi : g) {
      auto inv = inverse(gi);
      if (!inv) {
        ok = false;
        break;
      }
      h.push_back(*inv);
    }
    if (!ok || !is_chain_map(d, c, h)) continue;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!(g[i] * h[i] == KMatrix::identity(F, g[i].rows())) || !(h[i] * g[i] == KMatrix::identity(F, g[i].cols())))
        ok = false;
    if (!ok) continue;
    res.verdict = IsoVerdict::Isomorphic;
    res.forward = std::move(g);
    res.backward = std::move(h);
    return res;
  }
  res.reason = "no invertible chain map among " + std::to_string(budget) + " samples";
  return res;
}

namespace {

// Basis of {v in A^r : v * p lies in rowspace(rel)} for a torsion quotient.
TwistedMatrix preimage_basis(const Ring& R, std::size_t r, const TwistedMatrix& p, const TwistedMatrix& rel) {
  if (p.cols() == 0) return TwistedMatrix::identity(R, r);
  const TwistedMatrix stacked = rel.rows() == 0 ? p : TwistedMatrix::vstack({p, rel});
  const TwistedMatrix k = left_kernel(stacked);
  if (k.rows() == 0) return TwistedMatrix(R, 0, r);
  const HermiteResult hf = hermite_form(k.block(0, 0, k.rows(), r));
  return hf.h.block(0, 0, hf.rank(), r);
}

}  // namespace

NFactorization lift(const ChainModule& c) {
  const Ring& R = c.ring();
  require(R.is_commutative(), ErrorKind::Unsupported, "lift requires a commutative ring");
  const MonoReport mono = chain_is_mono(c);
  require(mono.mono, ErrorKind::Precondition, "lift: chain map s^" + std::to_string(mono.failing_index) + " is not injective");
  const std::size_t n = c.length() + 1;
  if (n == 1) return NFactorization(R, {TwistedMatrix::omega_map(R, 0)});

  // Minimal free cover of the top module: one generator per nonunit
  // invariant factor, mapped to the matching row of V^{-1}.
  const ModulePresentation& top = c.module(n - 2);
  TwistedMatrix cover(R, 0, top.generators);
  if (top.generators > 0) {
    const SmithResult s = smith_form(top.relations);
    auto vinv = solve_right(s.v, TwistedMatrix::identity(R, top.generators));
    require(vinv.solvable(), ErrorKind::Precondition, "Smith column transform is not invertible");
    std::vector<TwistedMatrix> rows;
    for (std::size_t i = 0; i < top.generators; ++i) {
      require(i < s.diag.size() && !s.diag[i].is_zero(), ErrorKind::NotQuotientModule, "top module is not torsion");
      if (!R.is_unit(s.diag[i])) rows.push_back(vinv.w->row(i));
    }
    if (!rows.empty()) cover = TwistedMatrix::vstack(rows);
  }
  const std::size_t r = cover.rows();
  std::vector<TwistedMatrix> d(n, TwistedMatrix(R, r, r));
  TwistedMatrix proj = cover;  // X^{i+1} -> generators of M^{i+1}
  for (std::size_t i = n - 1; i-- > 0;) {
    const ModulePresentation& above = c.module(i);  // M^{i+1}
    TwistedMatrix rel = above.relations;
    if (i >= 1) rel = rel.rows() == 0 ? c.map(i - 1) : TwistedMatrix::vstack({rel, c.map(i - 1)});
    const TwistedMatrix b = preimage_basis(R, r, proj, rel);
    require(b.rows() == r, ErrorKind::Precondition, "lift: kernel has the wrong rank");
    d[i] = b;
    if (i >= 1) {
      const ModulePresentation& below = c.module(i - 1);
      const TwistedMatrix sys = above.relations.rows() == 0
                                    ? c.map(i - 1)
                                    : TwistedMatrix::vstack({c.map(i - 1), above.relations});
      auto w = solve_right(sys, b.product(proj));
      require(w.solvable(), ErrorKind::Precondition, "lift: kernel element outside the image of s");
      proj = w.w->block(0, 0, r, below.generators);
    }
  }
  // The wrapping map is omega divided by the composite X^0 -> X^{n-1}.
  TwistedMatrix total = TwistedMatrix::identity(R, r);
  for (std::size_t i = 0; i + 1 < n; ++i) total = total.product(d[i]);
  auto w = solve_right(total, TwistedMatrix::scalar(R, r, R.omega()));
  require(w.solvable(), ErrorKind::Precondition, "lift: omega is not divisible by the composite");
  d[n - 1] = w.w->with_twist(1);
  NFactorization x(R, std::move(d));
  require_valid(x, "lift");
  return x;
}

bool in_mono_class(const NFactorization& x) {
  for (std::size_t i = 0; i + 1 < x.n(); ++i)
    if (hermite_form(x.map(i)).rank() != x.map(i).rows()) return false;
  return true;
}

FaithfulnessReport faithfulness_check(const FactorMorphism& f) {
  require_morphism(f, "faithfulness_check");
  require(in_mono_class(f.source()) && in_mono_class(f.target()), ErrorKind::Precondition,
          "faithfulness_check: objects outside the monomorphism class");
  FaithfulnessReport rep;
  const ChainModule cx = cok0(f.source()), cy = cok0(f.target());
  const LinearChainMap g = linear_chain_map(cx, cy, cok0(f));
  rep.cok_zero = is_zero_chain_map(g);
  rep.through_theta0 = factors_through_theta0(f).verdict;

  const TrivialCover cover = trivial_cover(f.target());
  const ChainModule ct = cok0(cover.object);
  const LinearChainMap e = linear_chain_map(ct, cy, cok0(cover.eps));
  const auto basis = chain_map_basis(cx, ct);
  if (rep.cok_zero) {
    rep.through_projective = true;
  } else if (!basis.empty()) {
    const Field F = linearization_field(f.ring());
    std::size_t len = 0;
    for (const auto& gi : g) len += gi.rows() * gi.cols();
    KMatrix m(F, len, basis.size()), b(F, len, 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::size_t pos = 0;
      for (std::size_t i = 0; i < g.size(); ++i) flatten_into(m, k, pos, basis[k][i] * e[i]);
    }
    std::size_t pos = 0;
    for (const auto& gi : g) flatten_into(b, 0, pos, gi);
    rep.through_projective = solve(m, b).has_value();
  }
  rep.null_homotopic = is_p_null_homotopic(f).verdict;
  return rep;
}

}  // namespace nfold
