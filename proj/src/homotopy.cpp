#include "nfold/homotopy.hpp"

#include <algorithm>
#include <sstream>

#include "nfold/error.hpp"

namespace nfold {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::NoUpToBound: return "no-witness-up-to-bound";
  }
  return "?";
}

std::vector<UnknownBlock> witness_shapes(const NFactorization& x, const NFactorization& y) {
  const std::size_t n = x.n();
  std::vector<UnknownBlock> s;
  for (std::size_t j = 0; j < n; ++j)
    s.push_back({x.rank(j), y.rank((j + 1) % n), j + 1 < n ? -1L : 0L});
  return s;
}

HomotopyWitness zero_witness(const NFactorization& x, const NFactorization& y) {
  HomotopyWitness w;
  for (const auto& s : witness_shapes(x, y)) w.h.emplace_back(x.ring(), s.rows, s.cols, s.twist);
  return w;
}

namespace {

void push_range(std::vector<TwistedMatrix>& seq, const NFactorization& x, std::size_t from, std::size_t to_excl) {
  for (std::size_t k = from; k < to_excl; ++k) seq.push_back(x.map(k));
}

MatrixTuple reconstruct_components(const NFactorization& x, const NFactorization& y, const MatrixTuple& h) {
  const std::size_t n = x.n();
  const Ring& R = x.ring();
  MatrixTuple f;
  for (std::size_t i = 0; i < n; ++i) {
    TwistedMatrix acc(R, x.rank(i), y.rank(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (h[j].is_zero()) continue;
      std::vector<TwistedMatrix> seq;
      if (j >= i) {
        push_range(seq, x, i, j);
        seq.push_back(h[j]);
        push_range(seq, y, j + 1, n);
        push_range(seq, y, 0, i);
      } else {
        push_range(seq, x, i, n);
        push_range(seq, x, 0, j);
        seq.push_back(h[j]);
        push_range(seq, y, j + 1, i);
      }
      const TwistedMatrix term = twisted_compose_all(R, seq, 0);
      require(term.twist() == 0, ErrorKind::Precondition, "homotopy term does not balance to twist 0");
      acc = acc + term;
    }
    f.push_back(std::move(acc));
  }
  return f;
}

void check_witness_shapes(const NFactorization& x, const NFactorization& y, const HomotopyWitness& w) {
  const auto shapes = witness_shapes(x, y);
  require(w.h.size() == shapes.size(), ErrorKind::ShapeMismatch, "witness needs one map per slot");
  for (std::size_t j = 0; j < shapes.size(); ++j)
    require(w.h[j].rows() == shapes[j].rows && w.h[j].cols() == shapes[j].cols && w.h[j].twist() == shapes[j].twist,
            ErrorKind::ShapeMismatch, "witness map h^" + std::to_string(j) + " has the wrong shape or twist");
}

int max_entry_degree(const FactorMorphism& f) {
  int d = 0;
  for (const auto& m : f.source().maps()) d = std::max(d, m.max_degree());
  for (const auto& m : f.target().maps()) d = std::max(d, m.max_degree());
  for (const auto& m : f.components()) d = std::max(d, m.max_degree());
  return d;
}

// Exact solve (commutative) or bounded search with escalation (skew).
struct Solved {
  Verdict verdict;
  std::optional<MatrixTuple> value;
  int bound;
};

Solved run_system(const LinearSystem& sys, const MatrixTuple& target, int start_bound, const BoundedOptions& opt) {
  if (sys.ring.is_commutative()) {
    auto v = solve_exact(sys, target);
    return {v ? Verdict::Yes : Verdict::No, v, -1};
  }
  int bound = start_bound;
  for (int step = 0;; ++step) {
    auto v = solve_bounded(sys, target, bound);
    if (v) return {Verdict::Yes, v, bound};
    if (step >= opt.escalations) return {Verdict::NoUpToBound, std::nullopt, bound};
    bound += sys.ring.omega_degree();
  }
}

}  // namespace

FactorMorphism reconstruct_from_witness(const NFactorization& x, const NFactorization& y, const HomotopyWitness& w) {
  require(x.n() == y.n(), ErrorKind::ShapeMismatch, "witness between different fold counts");
  check_witness_shapes(x, y, w);
  return FactorMorphism(x, y, reconstruct_components(x, y, w.h));
}

namespace {

HomotopyResult null_homotopy(const FactorMorphism& f, bool only_last, const BoundedOptions& opt) {
  const NFactorization& x = f.source();
  const NFactorization& y = f.target();
  const std::size_t n = x.n();
  LinearSystem sys{x.ring(), witness_shapes(x, y), {}};
  if (only_last) {
    sys.unknowns = {sys.unknowns.back()};
    sys.apply = [x, y, n](const MatrixTuple& u) {
      MatrixTuple h = zero_witness(x, y).h;
      h[n - 1] = u[0];
      return reconstruct_components(x, y, h);
    };
  } else {
    sys.apply = [x, y](const MatrixTuple& u) { return reconstruct_components(x, y, u); };
  }
  const Solved s = run_system(sys, f.components(), max_entry_degree(f) + x.ring().omega_degree(), opt);
  HomotopyResult res;
  res.verdict = s.verdict;
  res.bound = s.bound;
  if (s.value) {
    HomotopyWitness w;
    if (only_last) {
      w = zero_witness(x, y);
      w.h[n - 1] = (*s.value)[0];
    } else {
      w.h = *s.value;
    }
    // Every witness is re-verified before it is reported.
    require(reconstruct_from_witness(x, y, w) == f, ErrorKind::Precondition, "solver returned a bad witness");
    res.witness = std::move(w);
  }
  return res;
}

}  // namespace

HomotopyResult is_p_null_homotopic(const FactorMorphism& f, const BoundedOptions& opt) {
  require_morphism(f, "is_p_null_homotopic");
  return null_homotopy(f, false, opt);
}

HomotopyResult factors_through_theta0(const FactorMorphism& f, const BoundedOptions& opt) {
  require_morphism(f, "factors_through_theta0");
  return null_homotopy(f, true, opt);
}

FactorMorphism map_to_theta(const NFactorization& x, std::size_t i, const TwistedMatrix& alpha) {
  const std::size_t n = x.n();
  require(i < n, ErrorKind::IndexOutOfRange, "map_to_theta index");
  const std::size_t base = (i + n - 1) % n;
  require(alpha.rows() == x.rank(base) && alpha.twist() == 0, ErrorKind::ShapeMismatch, "map_to_theta: alpha shape");
  const Ring& R = x.ring();
  std::vector<TwistedMatrix> comps;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<TwistedMatrix> seq;
    if (k <= base) {
      push_range(seq, x, k, base);
    } else {
      push_range(seq, x, k, n);
      push_range(seq, x, 0, base);
    }
    seq.push_back(alpha);
    const TwistedMatrix p = twisted_compose_all(R, seq, 0);
    comps.push_back(twist_matrix(p, -p.twist()).with_twist(0));
  }
  return FactorMorphism(x, theta(R, n, i, alpha.cols()), std::move(comps));
}

TrivialCover trivial_cover(const NFactorization& y) {
  const std::size_t n = y.n();
  const Ring& R = y.ring();
  std::vector<NFactorization> parts;
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(theta(R, n, i, y.rank(i)));
    offsets.push_back(off);
    off += y.rank(i);
  }
  NFactorization t = direct_sum_object(parts);
  std::vector<TwistedMatrix> eps;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<TwistedMatrix> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<TwistedMatrix> seq;
      if (k >= i) {
        push_range(seq, y, i, k);
      } else {
        push_range(seq, y, i, n);
        push_range(seq, y, 0, k);
      }
      blocks.push_back(twisted_compose_all(R, seq, y.rank(i)).with_twist(0));
    }
    eps.push_back(TwistedMatrix::vstack(blocks));
  }
  return TrivialCover{t, FactorMorphism(t, y, std::move(eps)), offsets};
}

namespace {

FactorMorphism assemble_into_cover(const NFactorization& x, const TrivialCover& cover, const MatrixTuple& alphas) {
  const std::size_t n = x.n();
  std::vector<std::vector<TwistedMatrix>> per_slot(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FactorMorphism a = map_to_theta(x, i, alphas[i]);
    for (std::size_t k = 0; k < n; ++k) per_slot[k].push_back(a.component(k));
  }
  std::vector<TwistedMatrix> comps;
  for (std::size_t k = 0; k < n; ++k) comps.push_back(TwistedMatrix::hstack(per_slot[k]));
  return FactorMorphism(x, cover.object, std::move(comps));
}

std::vector<UnknownBlock> alpha_shapes(const NFactorization& x, const NFactorization& y) {
  const std::size_t n = x.n();
  std::vector<UnknownBlock> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back({x.rank((i + n - 1) % n), y.rank(i), 0});
  return s;
}

}  // namespace

std::optional<TrivialFactorization> factors_through_trivials(const FactorMorphism& f, Verdict* verdict,
                                                             const BoundedOptions& opt) {
  require_morphism(f, "factors_through_trivials");
  const NFactorization& x = f.source();
  const NFactorization& y = f.target();
  const TrivialCover cover = trivial_cover(y);
  LinearSystem sys{x.ring(), alpha_shapes(x, y), {}};
  sys.apply = [x, cover](const MatrixTuple& alphas) {
    return compose(assemble_into_cover(x, cover, alphas), cover.eps).components();
  };
  const Solved s = run_system(sys, f.components(), max_entry_degree(f) + x.ring().omega_degree(), opt);
  if (verdict != nullptr) *verdict = s.verdict;
  if (!s.value) return std::nullopt;
  FactorMorphism a = assemble_into_cover(x, cover, *s.value);
  require(compose(a, cover.eps) == f, ErrorKind::Precondition, "trivial factorization does not reproduce f");
  return TrivialFactorization{a, cover.eps, *s.value};
}

TrivialFactorization trivial_factorization_from_witness(const FactorMorphism& f, const HomotopyWitness& w) {
  const NFactorization& x = f.source();
  const std::size_t n = x.n();
  const TrivialCover cover = trivial_cover(f.target());
  MatrixTuple alphas(n, TwistedMatrix(x.ring(), 0, 0));
  alphas[0] = w.h[n - 1];
  for (std::size_t j = 0; j + 1 < n; ++j) alphas[j + 1] = twist_matrix(w.h[j], 1).with_twist(0);
  FactorMorphism a = assemble_into_cover(x, cover, alphas);
  return TrivialFactorization{a, cover.eps, alphas};
}

HomotopyWitness transport_pre(const FactorMorphism& e, const HomotopyWitness& w) {
  HomotopyWitness out;
  for (std::size_t j = 0; j < w.h.size(); ++j) out.h.push_back(twisted_compose(e.component(j), w.h[j]));
  return out;
}

HomotopyWitness transport_post(const HomotopyWitness& w, const FactorMorphism& g) {
  const std::size_t n = w.h.size();
  HomotopyWitness out;
  for (std::size_t j = 0; j < n; ++j) out.h.push_back(twisted_compose(w.h[j], g.component((j + 1) % n)));
  return out;
}

HomotopyWitness transport_face(const NFactorization& y, const HomotopyWitness& w) {
  const std::size_t m = y.n();
  require(w.h.size() == m + 1, ErrorKind::ShapeMismatch, "face transport expects a witness with m+1 maps");
  HomotopyWitness out;
  for (std::size_t j = 0; j + 1 < m; ++j) out.h.push_back(w.h[j]);
  out.h.push_back(twisted_compose(w.h[m - 1], y.map(m - 1)) + w.h[m]);
  return out;
}

namespace {

LinearSystem hom_system(const NFactorization& x, const NFactorization& y) {
  const std::size_t n = x.n();
  LinearSystem sys{x.ring(), {}, {}};
  for (std::size_t k = 0; k < n; ++k) sys.unknowns.push_back({x.rank(k), y.rank(k), 0});
  sys.apply = [x, y, n](const MatrixTuple& f) {
    MatrixTuple out;
    for (std::size_t k = 0; k < n; ++k) {
      const TwistedMatrix lhs = twisted_compose(x.map(k), f[(k + 1) % n]);
      const TwistedMatrix rhs = twisted_compose(f[k], y.map(k));
      out.push_back(lhs - rhs);
    }
    return out;
  };
  return sys;
}

}  // namespace

HomModule hom_module(const NFactorization& x, const NFactorization& y) {
  require(x.ring().is_commutative(), ErrorKind::Unsupported, "hom_module requires a commutative ring");
  require(x.n() == y.n(), ErrorKind::ShapeMismatch, "hom_module across different fold counts");
  const LinearSystem sys = hom_system(x, y);
  const TwistedMatrix m = operator_matrix(sys);
  TwistedMatrix kernel = m.rows() == 0 ? TwistedMatrix(x.ring(), 0, 0) : left_kernel(m);
  HomModule out{x, y, {}, kernel};
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    out.basis.emplace_back(x, y, unflatten(kernel.row(r), sys.unknowns));
  return out;
}

std::string StableHomReport::summary(const Ring& ring) const {
  std::ostringstream os;
  os << "stable hom: " << generators << " hom generators, invariant factors [";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? ", " : "") << ring.to_string(invariant_factors[i]);
  os << "], k-dimension " << k_dimension << (omega_torsion ? "" : " (NOT omega-torsion)");
  return os.str();
}

StableHomReport stable_hom(const NFactorization& x, const NFactorization& y, bool ideal_class_only) {
  const Ring& R = x.ring();
  require(R.is_commutative(), ErrorKind::Unsupported, "stable_hom requires a commutative ring");
  const HomModule hom = hom_module(x, y);
  const std::size_t N = hom.basis.size();
  StableHomReport rep{N, TwistedMatrix(R, 0, N), {}, 0, {}, true, ideal_class_only};
  if (N == 0) return rep;
  const std::size_t n = x.n();
  LinearSystem wsys{R, witness_shapes(x, y), {}};
  if (ideal_class_only) {
    wsys.unknowns = {wsys.unknowns.back()};
    wsys.apply = [x, y, n](const MatrixTuple& u) {
      MatrixTuple h = zero_witness(x, y).h;
      h[n - 1] = u[0];
      return reconstruct_components(x, y, h);
    };
  } else {
    wsys.apply = [x, y](const MatrixTuple& u) { return reconstruct_components(x, y, u); };
  }
  const TwistedMatrix images = operator_matrix(wsys);
  const HermiteResult basis_hf = hermite_form(hom.basis_rows);
  std::vector<TwistedMatrix> rel_rows;
  for (std::size_t r = 0; r < images.rows(); ++r) {
    auto c = solve_right(basis_hf, images.row(r));
    require(c.solvable(), ErrorKind::Precondition, "null-homotopic map outside the hom module");
    rel_rows.push_back(*c.w);
  }
  rep.relations = rel_rows.empty() ? TwistedMatrix(R, 0, N) : TwistedMatrix::vstack(rel_rows);
  if (rel_rows.empty()) {
    rep.omega_torsion = false;
    return rep;
  }
  const SmithResult s = smith_form(rep.relations);
  auto vinv = solve_right(s.v, TwistedMatrix::identity(R, N));
  require(vinv.solvable(), ErrorKind::Precondition, "Smith transform not invertible");
  for (std::size_t i = 0; i < N; ++i) {
    const Poly d = i < s.diag.size() ? s.diag[i] : Poly{};
    if (d.is_zero()) {
      rep.omega_torsion = false;
      continue;
    }
    if (R.is_unit(d)) continue;
    rep.invariant_factors.push_back(d);
    rep.k_dimension += static_cast<std::size_t>(d.degree());
    Poly wp = R.one();
    for (int t = 0; t < d.degree(); ++t) wp = R.mul(wp, R.omega());
    if (!R.left_divmod(wp, d).second.is_zero()) rep.omega_torsion = false;
    const TwistedMatrix row = vinv.w->row(i).product(hom.basis_rows);
    rep.representatives.emplace_back(x, y, unflatten(row, shapes_of(hom.basis[0].components())));
  }
  return rep;
}

HomotopyResult is_stably_zero(const NFactorization& x, const BoundedOptions& opt) {
  return is_p_null_homotopic(identity_morphism(x), opt);
}

}  // namespace nfold
