#include "nfold/module.hpp"

#include "nfold/error.hpp"

namespace nfold {

ModulePresentation::ModulePresentation(std::size_t g, TwistedMatrix rel) : generators(g), relations(std::move(rel)) {
  require(relations.cols() == g, ErrorKind::ShapeMismatch, "relations must have one column per generator");
  require(relations.twist() == 0, ErrorKind::Precondition, "relations must have twist 0");
}

bool ModulePresentation::is_omega_torsion() const {
  if (generators == 0) return true;
  const Ring& R = ring();
  return solve_right(relations, TwistedMatrix::scalar(R, generators, R.omega())).solvable();
}

Field linearization_field(const Ring& ring) {
  const Field& f = ring.field();
  if (!ring.is_commutative() && f.degree() > 1) return Field(FieldSpec::prime(f.characteristic()));
  return f;
}

namespace {

// Number of base-field digits per coefficient.
std::size_t digits_per_coeff(const Ring& ring, const Field& base) {
  return base == ring.field() ? 1 : ring.field().degree();
}

}  // namespace

KLinearization::KLinearization(const ModulePresentation& p, LinearizationMethod method)
    : ring_(p.ring()), base_(linearization_field(p.ring())), method_(method), gens_(p.generators),
      x_action_(base_, 0, 0) {
  const Ring& R = ring_;
  require(p.is_omega_torsion(), ErrorKind::NotQuotientModule, "module is not killed by omega");
  const std::size_t g = gens_;
  if (method == LinearizationMethod::Smith) {
    require(R.is_commutative(), ErrorKind::Unsupported, "Smith linearization requires a commutative ring");
    TwistedMatrix stacked = g == 0 ? TwistedMatrix(R, 0, 0)
                                   : TwistedMatrix::vstack({p.relations, TwistedMatrix::scalar(R, g, R.omega())});
    SmithResult s = smith_form(stacked);
    v_ = std::make_shared<TwistedMatrix>(s.v);
    auto inv = solve_right(s.v, TwistedMatrix::identity(R, g));
    require(inv.solvable(), ErrorKind::Precondition, "Smith column transform is not invertible");
    vinv_ = std::make_shared<TwistedMatrix>(*inv.w);
    diag_ = s.diag;
    for (const auto& d : diag_) {
      require(!d.is_zero(), ErrorKind::NotQuotientModule, "zero invariant factor");
      factor_degrees_.push_back(d.degree());
      dim_ += static_cast<std::size_t>(d.degree());
    }
  } else {
    const std::size_t m = static_cast<std::size_t>(R.omega_degree());
    const std::size_t e = digits_per_coeff(R, base_);
    ambient_ = g * m * e;
    std::vector<KMatrix> rows;
    const std::size_t nrel = p.relations.rows();
    KMatrix span(base_, nrel * m * e, ambient_);
    std::size_t k = 0;
    for (std::size_t r = 0; r < nrel; ++r) {
      TwistedMatrix rho = p.relations.row(r);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < e; ++b) {
          // (u^b x^a) * rho
          Scalar c = R.field().one();
          if (e > 1) {
            std::vector<std::uint32_t> d(e, 0);
            d[b] = 1;
            c = R.field().from_digits(d);
          }
          const Poly mult = R.monomial(c, static_cast<int>(a));
          span.set_block(k++, 0, ambient_coords(rho.left_scale(mult)));
        }
    }
    pivots_ = rref(span);
    reduced_ = std::make_shared<KMatrix>(span.block(0, 0, pivots_.size(), ambient_));
    std::vector<char> is_pivot(ambient_, 0);
    for (auto c : pivots_) is_pivot[c] = 1;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_pivot[c]) free_.push_back(c);
    dim_ = free_.size();
  }
  // Actions by x and, over a prime subfield, by the field generator.
  std::vector<Poly> multipliers{R.x_pow(1)};
  if (!(base_ == R.field())) multipliers.push_back(R.constant(R.field().from_code(R.field().characteristic())));
  for (std::size_t t = 0; t < multipliers.size(); ++t) {
    KMatrix act(base_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      KMatrix unit(base_, 1, dim_);
      unit.at(0, i) = base_.one();
      act.set_block(i, 0, encode(decode(unit).left_scale(multipliers[t])));
    }
    if (t == 0) x_action_ = act;
    else scalar_actions_.push_back(act);
  }
}

KMatrix KLinearization::ambient_coords(const TwistedMatrix& v) const {
  const Ring& R = ring_;
  const std::size_t m = static_cast<std::size_t>(R.omega_degree());
  const std::size_t e = digits_per_coeff(R, base_);
  KMatrix out(base_, 1, gens_ * m * e);
  for (std::size_t j = 0; j < gens_; ++j) {
    const Poly r = R.quotient_reduce(v.at(0, j));
    for (std::size_t a = 0; a < r.c.size(); ++a) {
      if (e == 1) {
        out.at(0, (j * m + a)) = r.c[a];
      } else {
        const auto d = R.field().digits(r.c[a]);
        for (std::size_t b = 0; b < e; ++b) out.at(0, (j * m + a) * e + b) = base_.from_code(d[b]);
      }
    }
  }
  return out;
}

TwistedMatrix KLinearization::from_ambient(const std::vector<Scalar>& a) const {
  const Ring& R = ring_;
  const std::size_t m = static_cast<std::size_t>(R.omega_degree());
  const std::size_t e = digits_per_coeff(R, base_);
  TwistedMatrix v(R, 1, gens_);
  for (std::size_t j = 0; j < gens_; ++j) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < m; ++i) {
      if (e == 1) {
        coeffs.push_back(a[j * m + i]);
      } else {
        std::vector<std::uint32_t> d(e);
        for (std::size_t b = 0; b < e; ++b) d[b] = code_of(a[(j * m + i) * e + b]);
        coeffs.push_back(R.field().from_digits(d));
      }
    }
    v.at(0, j) = R.from_coeffs(std::move(coeffs));
  }
  return v;
}

KMatrix KLinearization::encode(const TwistedMatrix& v) const {
  require(v.rows() == 1 && v.cols() == gens_, ErrorKind::ShapeMismatch, "encode expects a 1 x g row");
  const Ring& R = ring_;
  KMatrix out(base_, 1, dim_);
  if (method_ == LinearizationMethod::Smith) {
    const TwistedMatrix w = v.with_twist(0).product(*v_);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      const int d = diag_[i].degree();
      if (d <= 0) continue;
      const Poly r = R.left_divmod(w.at(0, i), diag_[i]).second;
      for (std::size_t a = 0; a < r.c.size(); ++a) out.at(0, pos + a) = r.c[a];
      pos += static_cast<std::size_t>(d);
    }
    return out;
  }
  KMatrix a = ambient_coords(v);
  const Field& F = base_;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar c = a.at(0, pivots_[k]);
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!F.is_zero(reduced_->at(k, j))) a.at(0, j) = F.sub(a.at(0, j), F.mul(c, reduced_->at(k, j)));
  }
  for (std::size_t i = 0; i < free_.size(); ++i) out.at(0, i) = a.at(0, free_[i]);
  return out;
}

TwistedMatrix KLinearization::decode(const KMatrix& c) const {
  require(c.rows() == 1 && c.cols() == dim_, ErrorKind::ShapeMismatch, "decode expects a 1 x dim row");
  const Ring& R = ring_;
  if (method_ == LinearizationMethod::Smith) {
    TwistedMatrix w(R, 1, gens_);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
      const int d = diag_[i].degree();
      if (d <= 0) continue;
      std::vector<Scalar> coeffs;
      for (int a = 0; a < d; ++a) coeffs.push_back(c.at(0, pos + static_cast<std::size_t>(a)));
      w.at(0, i) = R.from_coeffs(std::move(coeffs));
      pos += static_cast<std::size_t>(d);
    }
    return w.product(*vinv_);
  }
  std::vector<Scalar> a(ambient_, base_.zero());
  for (std::size_t i = 0; i < free_.size(); ++i) a[free_[i]] = c.at(0, i);
  return from_ambient(a);
}

KLinearization k_linearize(const ModulePresentation& p, LinearizationMethod method) {
  return KLinearization(p, method);
}

KLinearization k_linearize(const ModulePresentation& p) {
  return KLinearization(p, p.ring().is_commutative() ? LinearizationMethod::Smith : LinearizationMethod::Quotient);
}

KMatrix linear_map(const KLinearization& src, const KLinearization& dst, const TwistedMatrix& images) {
  require(images.rows() == src.generators() && images.cols() == dst.generators(), ErrorKind::ShapeMismatch,
          "generator images have the wrong shape");
  KMatrix out(src.base_field(), src.dim(), dst.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    KMatrix unit(src.base_field(), 1, src.dim());
    unit.at(0, i) = src.base_field().one();
    out.set_block(i, 0, dst.encode(src.decode(unit).product(images.with_twist(0))));
  }
  return out;
}

bool map_well_defined(const ModulePresentation& src, const KLinearization& dst, const TwistedMatrix& images) {
  if (src.relations.rows() == 0) return true;
  const TwistedMatrix img = src.relations.product(images.with_twist(0));
  for (std::size_t r = 0; r < img.rows(); ++r)
    if (!dst.encode(img.row(r)).is_zero()) return false;
  return true;
}

}  // namespace nfold
