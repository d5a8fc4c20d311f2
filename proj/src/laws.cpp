#include "nfold/laws.hpp"

#include <functional>
#include <map>

#include "nfold/error.hpp"

namespace nfold {

bool LawRecorder::check(bool ok, const std::string& what) {
  ++r_.cases;
  if (!ok) {
    ++r_.failures;
    if (r_.first_failure.empty()) r_.first_failure = what;
  }
  return ok;
}

namespace {

struct Ctx {
  const Ring& ring;
  const Scenario& sc;
  std::mt19937_64 rng;
  LawRecorder rec;

  RandomBounds bounds(std::size_t n) const { return {n, sc.max_rank, sc.max_deg}; }
  SeededObject seeded(std::size_t n) { return random_seeded(ring, rng, bounds(n)); }
  TwistedMatrix matrix(std::size_t r, std::size_t c, int deg) {
    TwistedMatrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 2 == 0) m.at(i, j) = ring.random(rng, deg);
    return m;
  }
  std::size_t rank() { return 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(sc.max_rank, 1)); }
};

bool valid_from(const FactorMorphism& f, const NFactorization& s, const NFactorization& t) {
  return f.source() == s && f.target() == t && check_morphism(f).valid;
}

// An endomorphism with a nonzero stable part whenever one is available.
FactorMorphism random_endo(const SeededObject& x, std::mt19937_64& rng) {
  return random_morphism(x, x, rng) + random_null_homotopic(x.object, x.object, rng, 1);
}

FactorMorphism mixed_endo(const NFactorization& x, std::mt19937_64& rng) {
  return identity_morphism(x) + random_hom(x, x, rng);
}

void suite_l22(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const std::size_t m = c.rank();
    const TwistedMatrix f = c.matrix(m, m, 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      c.rec.check(shift(theta(c.ring, n, i + 1, m)) == theta(c.ring, n, i, m), "S theta^{i+1} = theta^i (objects)");
      c.rec.check(shift(theta(n, i + 1, f)) == theta(n, i, f), "S theta^{i+1} = theta^i (morphisms)");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        c.rec.check(projection(theta(c.ring, n, i, m), j) == m, "pr^j theta^i = id (objects)");
        c.rec.check(projection(theta(n, i, f), j) == f, "pr^j theta^i = id (morphisms)");
      }
  }
}

void suite_l23(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const std::size_t m = c.rank();
    const TwistedMatrix f = c.matrix(m, m, 2);
    NFactorization obj = module_object(c.ring, m);
    FactorMorphism mor(obj, obj, {f});
    for (std::size_t k = 1; k < n; ++k) {
      obj = face(obj, 0);
      mor = face(mor, 0);
    }
    c.rec.check(obj == theta(c.ring, n, 0, m), "theta^0 = composite of faces theta^0_k (objects)");
    c.rec.check(mor == theta(n, 0, f), "theta^0 = composite of faces theta^0_k (morphisms)");

    const SeededObject x = c.seeded(n);
    const FactorMorphism g = random_endo(x, c.rng);
    for (std::size_t i = 0; i < n; ++i) {
      c.rec.check(projection(shift(x.object, static_cast<long>(i)), 0) == projection(x.object, i),
                  "pr^i = pr^0 S^i (objects)");
      c.rec.check(projection(shift(g, static_cast<long>(i)), 0) == projection(g, i), "pr^i = pr^0 S^i (morphisms)");
    }
    NFactorization y = x.object;
    FactorMorphism h = g;
    while (y.n() > 1) {
      y = degeneracy(y, 0);
      h = degeneracy(h, 0);
    }
    c.rec.check(y == module_object(c.ring, x.object.rank(0)), "pr^0 = pr^0_2 ... pr^0_n (objects)");
    c.rec.check(h.component(0) == g.component(0) && h.source() == y, "pr^0 = pr^0_2 ... pr^0_n (morphisms)");
  }
}

void suite_l24(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const SeededObject x = c.seeded(n), y = c.seeded(n + 1);
    const FactorMorphism f = random_endo(x, c.rng), g = random_endo(y, c.rng);
    for (std::size_t i = 0; i <= n; ++i) {
      c.rec.check(degeneracy(face(x.object, i), i) == x.object, "pr^i theta^i = id (objects)");
      c.rec.check(degeneracy(face(f, i), i) == f, "pr^i theta^i = id (morphisms)");
    }
    for (std::size_t i = 0; i < n; ++i) {
      c.rec.check(shift(face(x.object, i + 1)) == face(shift(x.object), i), "S theta^{i+1} = theta^i S (objects)");
      c.rec.check(shift(face(f, i + 1)) == face(shift(f), i), "S theta^{i+1} = theta^i S (morphisms)");
      c.rec.check(degeneracy(shift(y.object), i) == shift(degeneracy(y.object, i + 1)),
                  "pr^i S = S pr^{i+1} (objects)");
      c.rec.check(degeneracy(shift(g), i) == shift(degeneracy(g, i + 1)), "pr^i S = S pr^{i+1} (morphisms)");
    }
  }
}

NFactorization object_in(Ctx& c, std::size_t n) { return c.seeded(n).object; }

// Source and target; every other pair is an endomorphism pair, where stably
// nonzero maps are common.
std::pair<SeededObject, SeededObject> hom_pair(Ctx& c, std::size_t n, std::size_t s) {
  SeededObject x = c.seeded(n);
  if (s % 2 == 0) return {x, x};
  return {x, c.seeded(n)};
}

void adjunction_case(Ctx& c, const Adjunction& adj) {
  const std::size_t cn = adj.left.src_n, dn = adj.left.dst_n;
  const NFactorization y = object_in(c, dn);
  const NFactorization x = c.rng() % 2 == 0 ? object_in(c, cn) : adj.right(y);
  const NFactorization lx = adj.left(x), ry = adj.right(y);
  FactorMorphism f = random_hom(lx, y, c.rng);
  if (x == ry) f = f + adj.counit(y);
  FactorMorphism g = random_hom(x, ry, c.rng);
  if (lx == y) g = g + adj.unit(x);
  check_adjunction(c.rec, adj, x, y, f, g, mixed_endo(x, c.rng), mixed_endo(y, c.rng));
}

void suite_l25(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    adjunction_case(c, face_degeneracy_adjunction(n, 0));
    adjunction_case(c, degeneracy_face_adjunction(n, n));
    for (std::size_t i = 1; i < n; ++i) adjunction_case(c, face_degeneracy_adjunction(n, i));
    for (std::size_t i = 1; i < n; ++i) adjunction_case(c, degeneracy_face_adjunction(n, i));
    adjunction_case(c, corner_adjunction(n));
  }
}

void suite_l26(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const SeededObject x = c.seeded(n), y = c.seeded(n), z = c.seeded(n);
    const HomotopyWitness w1 = random_witness(x.object, y.object, c.rng, 2);
    const HomotopyWitness w2 = random_witness(x.object, y.object, c.rng, 2);
    const FactorMorphism f1 = reconstruct_from_witness(x.object, y.object, w1);
    c.rec.check(check_morphism(f1).valid, "a reconstructed witness is a morphism");
    HomotopyWitness sum;
    for (std::size_t j = 0; j < n; ++j) sum.h.push_back(w1.h[j] + w2.h[j]);
    c.rec.check(reconstruct_from_witness(x.object, y.object, sum) ==
                    f1 + reconstruct_from_witness(x.object, y.object, w2),
                "reconstruction is additive");
    const FactorMorphism e = random_morphism(z, x, c.rng);
    const FactorMorphism g = random_morphism(y, z, c.rng);
    c.rec.check(reconstruct_from_witness(z.object, y.object, transport_pre(e, w1)) == compose(e, f1),
                "e then f is null-homotopic with the transported witness");
    c.rec.check(reconstruct_from_witness(x.object, z.object, transport_post(w1, g)) == compose(f1, g),
                "f then g is null-homotopic with the transported witness");
    if (c.ring.is_commutative()) {
      const FactorMorphism f = random_morphism(x, y, c.rng);
      HomotopyWitness w = zero_witness(x.object, y.object);
      w.h[n - 1] = twisted_compose(f.component(n - 1), y.object.map(n - 1)).with_twist(0);
      c.rec.check(reconstruct_from_witness(x.object, y.object, w) == scale_morphism(f, c.ring.omega()),
                  "omega * f is null-homotopic");
    }
  }
}

void suite_l27(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const auto [x, y] = hom_pair(c, n, s);
    FactorMorphism f = random_null_homotopic(x.object, y.object, c.rng, 1);
    if (s % 2 == 1) f = f + random_morphism(x, y, c.rng);
    const HomotopyResult h = is_p_null_homotopic(f);
    Verdict tv = Verdict::No;
    const auto tf = factors_through_trivials(f, &tv);
    if (h.verdict == Verdict::NoUpToBound || tv == Verdict::NoUpToBound) {
      if (h.found()) c.rec.check(reconstruct_from_witness(x.object, y.object, *h.witness) == f, "witness reconstructs f");
      if (tf) c.rec.check(compose(tf->into, tf->out) == f, "trivial factorization reproduces f");
      continue;
    }
    c.rec.check(h.found() == tf.has_value(), "null-homotopic iff factors through trivial objects");
    if (h.found()) {
      c.rec.check(reconstruct_from_witness(x.object, y.object, *h.witness) == f, "witness reconstructs f");
      const TrivialFactorization t = trivial_factorization_from_witness(f, *h.witness);
      c.rec.check(check_morphism(t.into).valid && check_morphism(t.out).valid && compose(t.into, t.out) == f,
                  "witness gives a factorization through trivial objects");
    }
    if (tf) c.rec.check(compose(tf->into, tf->out) == f, "trivial factorization reproduces f");
  }
}

void suite_p31(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const SeededObject x = c.seeded(n), y = c.seeded(n);
    const GammaModuleData gx = phi(x.object);
    c.rec.check(check_gamma(gx).ok, "Phi(X) satisfies the Gamma relations");
    c.rec.check(psi(gx) == x.object, "Psi Phi = id (objects)");
    const GammaModuleData gy = phi(y.object);
    const FactorMorphism f = random_morphism(x, y, c.rng);
    c.rec.check(psi(gx, gy, phi(f)) == f, "Psi Phi = id (morphisms)");
    c.rec.check(phi(psi(gx)).maps.size() == gx.maps.size() && [&] {
      const GammaModuleData again = phi(psi(gx));
      for (std::size_t k = 0; k < gx.maps.size(); ++k)
        if (again.maps[k] != gx.maps[k]) return false;
      return true;
    }(), "Phi Psi = id on Phi(X)");
    if (n >= 2) {
      GammaModuleData bad = gx;
      const std::size_t i = 1 + c.rng() % n;
      std::size_t j = 1 + c.rng() % (n - 1);
      if (j >= i) ++j;
      TwistedMatrix& m = bad.f(i, j);
      if (m.rows() > 0 && m.cols() > 0) {
        m.at(0, 0) = c.ring.add(m.at(0, 0), c.ring.one());
        c.rec.check(!check_gamma(bad).ok, "a corrupted structure map is rejected");
      }
    }
  }
}

void suite_p34(Ctx& c) {
  const std::size_t n = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const std::size_t m = c.rank(), i = c.rng() % n;
    const NFactorization t = theta(c.ring, n, i, m);
    const HomotopyResult r = is_stably_zero(t);
    c.rec.check(r.found() && reconstruct_from_witness(t, t, *r.witness) == identity_morphism(t),
                "theta^i(A^m) is stably zero");
    const SeededObject x = c.seeded(n);
    const FactorMorphism into =
        map_to_theta(x.object, i, c.matrix(x.object.rank((i + n - 1) % n), m, 1));
    c.rec.check(check_morphism(into).valid && is_p_null_homotopic(into).found(),
                "maps into theta^i(A^m) are null-homotopic");
    const TrivialCover cov = trivial_cover(x.object);
    c.rec.check(check_morphism(cov.eps).valid && is_p_null_homotopic(cov.eps).found(),
                "the trivial cover map is null-homotopic");
  }
}

void suite_l45(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const NFactorization x = object_in(c, n);
    const TwistedMatrix dd = compose_range(x, 0, static_cast<long>(n) - 2);
    const auto h = solve_right(dd, TwistedMatrix::scalar(c.ring, x.rank(0), c.ring.omega()));
    c.rec.check(h.solvable() && h.w->same_entries(x.map(n - 1)), "omega = h f has the solution h = d^{n-1}");
    c.rec.check(hermite_form(dd).rank() == dd.rows(), "the solution h is unique");
  }
}

// Chain maps Cok0(X) -> Cok0(Y) all come from morphisms X -> Y.
bool full_on(const NFactorization& x, const NFactorization& y) {
  const Ring& R = x.ring();
  const ChainModule cx = cok0(x), cy = cok0(y);
  const auto targets = chain_map_basis(cx, cy);
  if (targets.empty()) return true;
  const HomModule hom = hom_module(x, y);
  const Field F = linearization_field(R);
  std::size_t len = 0;
  for (const auto& m : targets[0]) len += m.rows() * m.cols();
  std::vector<LinearChainMap> images;
  for (const auto& b : hom.basis)
    for (int a = 0; a < R.omega_degree(); ++a) images.push_back(linear_chain_map(cx, cy, cok0(scale_morphism(b, R.x_pow(a)))));
  auto to_matrix = [&](const std::vector<LinearChainMap>& maps) {
    KMatrix m(F, maps.size(), len);
    for (std::size_t r = 0; r < maps.size(); ++r) {
      std::size_t pos = 0;
      for (const auto& part : maps[r])
        for (std::size_t i = 0; i < part.rows(); ++i)
          for (std::size_t j = 0; j < part.cols(); ++j) m.at(r, pos++) = part.at(i, j);
    }
    return m;
  };
  const KMatrix img = to_matrix(images), tgt = to_matrix(targets);
  return rank(KMatrix::vstack(img, tgt)) == rank(img);
}

void suite_l46(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    if (c.ring.is_commutative()) {
      const ChainModule ch = random_chain(c.ring, c.rng, n - 1, 2);
      const NFactorization x = lift(ch);
      c.rec.check(validate(x).valid, "lift produces a valid factorization");
      c.rec.check(chain_iso(cok0(x), ch, c.rng()).verdict == IsoVerdict::Isomorphic, "Cok0(lift(c)) is isomorphic to c");
      c.rec.check(full_on(object_in(c, n), object_in(c, n)), "every chain map lifts to a morphism");
    } else {
      const SeededObject x = c.seeded(n);
      c.rec.check(chain_iso(cok0(x.object), cok0(x.seed_sum), c.rng()).verdict == IsoVerdict::Isomorphic,
                  "isomorphic factorizations have isomorphic Cok0 chains");
    }
  }
}

void suite_l48(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const auto [x, y] = hom_pair(c, n, s);
    FactorMorphism f = random_null_homotopic(x.object, y.object, c.rng, 1);
    if (s % 2 == 1) f = f + random_morphism(x, y, c.rng);
    if (s % 5 == 4) f = zero_morphism(x.object, y.object) + f - f;
    const FaithfulnessReport r = faithfulness_check(f);
    if (r.through_theta0 != Verdict::NoUpToBound)
      c.rec.check(r.agree_zero(), "Cok0(f) = 0 iff f factors through theta^0");
    if (r.null_homotopic != Verdict::NoUpToBound)
      c.rec.check(r.agree_projective(), "Cok0(f) factors through a projective iff f is null-homotopic");
  }
}

void suite_t410(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const SeededObject x = c.seeded(n), y = c.seeded(n), z = c.seeded(n);
    const FactorMorphism f = random_morphism(x, y, c.rng), g = random_morphism(y, z, c.rng);
    const ChainModule cx = cok0(x.object), cy = cok0(y.object), cz = cok0(z.object);
    const LinearChainMap lf = linear_chain_map(cx, cy, cok0(f)), lg = linear_chain_map(cy, cz, cok0(g));
    const LinearChainMap lfg = linear_chain_map(cx, cz, cok0(compose(f, g)));
    bool ok = is_chain_map(cx, cy, lf);
    for (std::size_t i = 0; i < lf.size(); ++i) ok = ok && lfg[i] == lf[i] * lg[i];
    c.rec.check(ok, "Cok0 is a functor");
    c.rec.check(chain_is_mono(cx).mono, "Cok0(X) lies in the monomorphism category");
    const std::size_t m = c.rank();
    const ChainModule t0 = cok0(theta(c.ring, n, 0, m));
    bool zero = true;
    for (std::size_t d : t0.dims()) zero = zero && d == 0;
    c.rec.check(zero, "Cok0(theta^0) = 0");
    const ChainModule t1 = cok0(theta(c.ring, n, 1, m));
    bool ident = true;
    const std::size_t per = static_cast<std::size_t>(c.ring.omega_degree()) * c.ring.field().degree() /
                            linearization_field(c.ring).degree();
    for (std::size_t i = 0; i < t1.length(); ++i) ident = ident && t1.lin(i).dim() == m * per;
    for (std::size_t i = 0; i + 1 < t1.length(); ++i)
      ident = ident && t1.linear(i) == KMatrix::identity(t1.linear(i).field(), t1.linear(i).rows());
    c.rec.check(ident, "Cok0(theta^1(A^m)) = (Abar^m, ..., Abar^m) with identity maps");
  }
}

void suite_t411(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    if (c.ring.is_commutative()) {
      const ChainModule ch = random_chain(c.ring, c.rng, n - 1, 2);
      const NFactorization x = lift(ch);
      std::size_t nonunit = 0;
      const ModulePresentation& top = ch.module(n - 2);
      if (top.generators > 0)
        for (const auto& d : smith_form(top.relations).diag) nonunit += !c.ring.is_unit(d);
      c.rec.check(x.rank(n - 1) == nonunit, "lift has top rank = number of nonunit invariant factors");
      c.rec.check(in_mono_class(x), "lift has free components and injective maps");
    } else {
      const ChainModule ch = cok0(object_in(c, n));
      bool torsion = true;
      for (const auto& m : ch.modules()) torsion = torsion && m.is_omega_torsion();
      c.rec.check(torsion && chain_is_mono(ch).mono, "Cok0 chains of free factorizations are torsion monomorphisms");
    }
  }
}

void suite_l51(Ctx& c) {
  const std::size_t m = c.sc.n;
  for (std::size_t s = 0; s < c.sc.samples; ++s) {
    const auto [x, y] = hom_pair(c, m, s);
    const FactorMorphism f = random_null_homotopic(x.object, y.object, c.rng, 1);
    const HomotopyResult r = is_p_null_homotopic(face(f, m - 1));
    if (c.rec.check(r.verdict != Verdict::No, "the face of a null-homotopic map is null-homotopic") && r.found())
      c.rec.check(reconstruct_from_witness(x.object, y.object, transport_face(y.object, *r.witness)) == f,
                  "face transport reconstructs f");
    const FactorMorphism g = f + random_morphism(x, y, c.rng);
    const HomotopyResult a = is_p_null_homotopic(g), b = is_p_null_homotopic(face(g, m - 1));
    if (a.verdict != Verdict::NoUpToBound && b.verdict != Verdict::NoUpToBound)
      c.rec.check(a.found() == b.found(), "the face functor is faithful on stable classes");
  }
}

void suite_t52(Ctx& c) {
  const std::size_t n = std::max<std::size_t>(c.sc.n, 2);
  for (std::size_t k = 1; k < n; ++k)
    check_recollement(c.rec, c.ring, n, k, c.rng, {n, c.sc.max_rank, c.sc.max_deg}, c.sc.samples);
}

struct SuiteDef {
  std::string title;
  std::function<void(Ctx&)> run;
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r{
      {"L2.2", {"shift and projections of trivial factorizations", suite_l22}},
      {"L2.3", {"theta^0 as composite of faces; pr^i = pr^0 S^i", suite_l23}},
      {"L2.4", {"faces, degeneracies and the shift", suite_l24}},
      {"L2.5", {"adjunctions between faces and degeneracies", suite_l25}},
      {"L2.6/Def", {"homotopy witnesses", suite_l26}},
      {"L2.7", {"null-homotopic iff factoring through trivial objects", suite_l27}},
      {"P3.1", {"Gamma_n modules: Phi and Psi", suite_p31}},
      {"P3.4-instances", {"trivial factorizations are projective-injective", suite_p34}},
      {"L4.5", {"division by omega in two-fold factorizations", suite_l45}},
      {"L4.6", {"Cok0 is full and dense", suite_l46}},
      {"L4.8", {"Cok0 is faithful on stable classes", suite_l48}},
      {"T4.10", {"Cok0 into the monomorphism category", suite_t410}},
      {"T4.11", {"matrix factorization variant of the lift", suite_t411}},
      {"L5.1", {"faces are fully faithful on stable categories", suite_l51}},
      {"T5.2", {"recollements", suite_t52}},
  };
  return r;
}

std::uint64_t tag_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char ch : tag) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
  return h;
}

}  // namespace

const std::vector<std::string>& law_tags() {
  static const std::vector<std::string> tags{"L2.2", "L2.3", "L2.4", "L2.5", "L2.6/Def", "L2.7", "P3.1", "P3.4-instances",
                                             "L4.5", "L4.6", "L4.8", "T4.10", "T4.11", "L5.1", "T5.2"};
  return tags;
}

std::string law_title(const std::string& tag) {
  auto it = registry().find(tag);
  return it == registry().end() ? std::string() : it->second.title;
}

SuiteResult run_suite(const std::string& tag, const Ring& ring, const Scenario& sc) {
  auto it = registry().find(tag);
  require(it != registry().end(), ErrorKind::InvalidInput, "unknown law tag '" + tag + "'");
  require(sc.n >= 1, ErrorKind::InvalidInput, "scenario needs n >= 1");
  SuiteResult res;
  res.tag = tag;
  res.title = it->second.title;
  Ctx ctx{ring, sc, std::mt19937_64(tag_seed(sc.seed, tag)), LawRecorder(res)};
  try {
    it->second.run(ctx);
  } catch (const Error& e) {
    ctx.rec.check(false, std::string("exception: ") + e.what());
  }
  return res;
}

std::vector<SuiteResult> run_laws(const Scenario& sc) {
  const Ring ring(sc.ring);
  std::vector<SuiteResult> out;
  for (const auto& tag : sc.suites.empty() ? law_tags() : sc.suites) out.push_back(run_suite(tag, ring, sc));
  return out;
}

void check_adjunction(LawRecorder& rec, const Adjunction& adj, const NFactorization& x, const NFactorization& y,
                      const FactorMorphism& f, const FactorMorphism& g, const FactorMorphism& a,
                      const FactorMorphism& b) {
  const std::string tag = adj.name + ": ";
  const NFactorization lx = adj.left(x), ry = adj.right(y);
  const FactorMorphism pf = adj.phi(x, y, f);
  rec.check(valid_from(pf, x, ry), tag + "phi lands in Hom(X, RY)");
  rec.check(adj.phi_inv(x, y, pf) == f, tag + "phi_inv phi = id");
  const FactorMorphism qg = adj.phi_inv(x, y, g);
  rec.check(valid_from(qg, lx, y), tag + "phi_inv lands in Hom(LX, Y)");
  rec.check(adj.phi(x, y, qg) == g, tag + "phi phi_inv = id");
  rec.check(adj.phi(x, y, compose(compose(adj.left(a), f), b)) == compose(compose(a, pf), adj.right(b)),
            tag + "phi is natural");
  rec.check(compose(adj.left(adj.unit(x)), adj.counit(lx)) == identity_morphism(lx), tag + "triangle identity at LX");
  rec.check(compose(adj.unit(ry), adj.right(adj.counit(y))) == identity_morphism(ry), tag + "triangle identity at RY");
}

void check_recollement(LawRecorder& rec, const Ring& ring, std::size_t n, std::size_t k, std::mt19937_64& rng,
                       const RandomBounds& b, std::size_t samples) {
  const Recollement rc = recollement_functors(n, k);
  auto object_in = [&](std::size_t m) { return random_seeded(ring, rng, {m, b.max_rank, b.max_deg}); };
  for (std::size_t s = 0; s < samples; ++s) {
    const SeededObject z = object_in(k);
    const FactorMorphism h = random_morphism(z, z, rng) + random_null_homotopic(z.object, z.object, rng, 1);
    rec.check(rc.quotient(rc.section_left(z.object)) == z.object, "quotient after left section = id (objects)");
    rec.check(rc.quotient(rc.section_right(z.object)) == z.object, "quotient after right section = id (objects)");
    rec.check(rc.quotient(rc.section_left(h)) == h, "quotient after left section = id (morphisms)");
    rec.check(rc.quotient(rc.section_right(h)) == h, "quotient after right section = id (morphisms)");
    const NFactorization qw = rc.quotient(rc.inc(object_in(n - k + 1).object));
    const HomotopyResult r = is_stably_zero(qw);
    // Skew rings only have a bounded search; a missing witness there is not a failure.
    rec.check(ring.is_commutative() ? r.found() : r.verdict != Verdict::No, "inc objects vanish stably under the quotient");
    if (r.found())
      rec.check(reconstruct_from_witness(qw, qw, *r.witness) == identity_morphism(qw),
                "stable-zero witness reconstructs the identity");
    for (const Adjunction* adj : {&rc.adj_inc_left, &rc.adj_inc_right, &rc.adj_quot_left, &rc.adj_quot_right}) {
      const NFactorization y = object_in(adj->left.dst_n).object;
      const NFactorization x = rng() % 2 == 0 ? object_in(adj->left.src_n).object : adj->right(y);
      const NFactorization lx = adj->left(x), ry = adj->right(y);
      FactorMorphism f = random_hom(lx, y, rng);
      if (x == ry) f = f + adj->counit(y);
      FactorMorphism g = random_hom(x, ry, rng);
      if (lx == y) g = g + adj->unit(x);
      check_adjunction(rec, *adj, x, y, f, g, identity_morphism(x) + random_hom(x, x, rng),
                       identity_morphism(y) + random_hom(y, y, rng));
    }
  }
}

FactorMorphism random_hom(const NFactorization& x, const NFactorization& y, std::mt19937_64& rng) {
  const Ring& R = x.ring();
  FactorMorphism f = random_null_homotopic(x, y, rng, 1);
  std::size_t size = 0;
  for (std::size_t i = 0; i < x.n(); ++i) size += x.rank(i) * y.rank(i);
  if (R.is_commutative() && size <= 24 && rng() % 2 == 0) {
    const HomModule hom = hom_module(x, y);
    for (const auto& b : hom.basis)
      if (rng() % 2 == 0) f = f + scale_morphism(b, R.random(rng, 1));
  }
  return f;
}

}  // namespace nfold
