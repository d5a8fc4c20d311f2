#include "nfold/functors.hpp"

#include "nfold/error.hpp"

namespace nfold {

Functor identity_functor(std::size_t n) {
  return Functor{"id", n, n, [](const NFactorization& x) { return x; }, [](const FactorMorphism& f) { return f; }};
}

Functor then(const Functor& f, const Functor& g) {
  require(f.dst_n == g.src_n, ErrorKind::ShapeMismatch, "functor composite " + g.name + " after " + f.name);
  auto fo = f.obj, go = g.obj;
  auto fm = f.mor, gm = g.mor;
  return Functor{g.name + " o " + f.name, f.src_n, g.dst_n,
                 [fo, go](const NFactorization& x) { return go(fo(x)); },
                 [fm, gm](const FactorMorphism& m) { return gm(fm(m)); }};
}

Functor chain(const std::vector<Functor>& steps, std::size_t n_if_empty) {
  if (steps.empty()) return identity_functor(n_if_empty);
  Functor acc = steps.front();
  for (std::size_t k = 1; k < steps.size(); ++k) acc = then(acc, steps[k]);
  return acc;
}

Functor shift_functor(std::size_t n, long power) {
  return Functor{"S^" + std::to_string(power), n, n,
                 [power](const NFactorization& x) { return shift(x, power); },
                 [power](const FactorMorphism& f) { return shift(f, power); }};
}

Functor theta_functor(std::size_t n, std::size_t i) {
  return Functor{"theta^" + std::to_string(i), 1, n,
                 [n, i](const NFactorization& x) { return theta(x.ring(), n, i, x.rank(0)); },
                 [n, i](const FactorMorphism& f) { return theta(n, i, f.component(0)); }};
}

Functor projection_functor(std::size_t n, std::size_t i) {
  return Functor{"pr^" + std::to_string(i), n, 1,
                 [i](const NFactorization& x) { return module_object(x.ring(), projection(x, i)); },
                 [i](const FactorMorphism& f) {
                   return FactorMorphism(module_object(f.ring(), f.source().rank(i)),
                                         module_object(f.ring(), f.target().rank(i)), {projection(f, i)});
                 }};
}

Functor face_functor(std::size_t n, std::size_t i) {
  return Functor{"theta_" + std::to_string(n) + "^" + std::to_string(i), n, n + 1,
                 [i](const NFactorization& x) { return face(x, i); },
                 [i](const FactorMorphism& f) { return face(f, i); }};
}

Functor degeneracy_functor(std::size_t n, std::size_t i) {
  return Functor{"pr_" + std::to_string(n + 1) + "^" + std::to_string(i), n + 1, n,
                 [i](const NFactorization& y) { return degeneracy(y, i); },
                 [i](const FactorMorphism& g) { return degeneracy(g, i); }};
}

FactorMorphism Adjunction::unit(const NFactorization& x) const {
  const NFactorization lx = left(x);
  return phi(x, lx, identity_morphism(lx));
}

FactorMorphism Adjunction::counit(const NFactorization& y) const {
  const NFactorization ry = right(y);
  return phi_inv(ry, y, identity_morphism(ry));
}

Adjunction face_degeneracy_adjunction(std::size_t n, std::size_t i) {
  require(i < n, ErrorKind::IndexOutOfRange, "face/degeneracy adjunction index");
  Adjunction a;
  a.name = "theta_" + std::to_string(n) + "^" + std::to_string(i) + " -| pr_" + std::to_string(n + 1) + "^" +
           std::to_string(i);
  a.left = face_functor(n, i);
  a.right = degeneracy_functor(n, i);
  // The square at the inserted identity forces f^{i+1} = f^i d_Y^i.
  a.phi = [i](const NFactorization& x, const NFactorization& y, const FactorMorphism& f) {
    require(f.source() == face(x, i) && f.target() == y, ErrorKind::Precondition, "phi: morphism not in Hom(LX, Y)");
    std::vector<TwistedMatrix> c = f.components();
    c.erase(c.begin() + static_cast<long>(i) + 1);
    return FactorMorphism(x, degeneracy(y, i), std::move(c));
  };
  a.phi_inv = [i](const NFactorization& x, const NFactorization& y, const FactorMorphism& g) {
    require(g.source() == x && g.target() == degeneracy(y, i), ErrorKind::Precondition,
            "phi_inv: morphism not in Hom(X, RY)");
    std::vector<TwistedMatrix> c = g.components();
    c.insert(c.begin() + static_cast<long>(i) + 1, twisted_compose(g.component(i), y.map(i)));
    return FactorMorphism(face(x, i), y, std::move(c));
  };
  return a;
}

Adjunction degeneracy_face_adjunction(std::size_t n, std::size_t i) {
  require(i >= 1 && i <= n, ErrorKind::IndexOutOfRange, "degeneracy/face adjunction index");
  Adjunction a;
  a.name = "pr_" + std::to_string(n + 1) + "^" + std::to_string(i - 1) + " -| theta_" + std::to_string(n) + "^" +
           std::to_string(i);
  a.left = degeneracy_functor(n, i - 1);
  a.right = face_functor(n, i);
  // Hom(pr^{i-1} Y, X) -> Hom(Y, theta^i X): insert the component through Y^i.
  a.phi = [n, i](const NFactorization& y, const NFactorization& x, const FactorMorphism& f) {
    require(f.source() == degeneracy(y, i - 1) && f.target() == x, ErrorKind::Precondition,
            "phi: morphism not in Hom(LY, X)");
    std::vector<TwistedMatrix> c = f.components();
    if (i < n) {
      c.insert(c.begin() + static_cast<long>(i), twisted_compose(y.map(i), f.component(i)));
    } else {
      c.push_back(twist_matrix(twisted_compose(y.map(n), f.component(0)), -1).with_twist(0));
    }
    return FactorMorphism(y, face(x, i), std::move(c));
  };
  a.phi_inv = [n, i](const NFactorization& y, const NFactorization& x, const FactorMorphism& g) {
    require(g.source() == y && g.target() == face(x, i), ErrorKind::Precondition,
            "phi_inv: morphism not in Hom(Y, RX)");
    std::vector<TwistedMatrix> c = g.components();
    if (i < n) c.erase(c.begin() + static_cast<long>(i));
    else c.pop_back();
    return FactorMorphism(degeneracy(y, i - 1), x, std::move(c));
  };
  return a;
}

Adjunction shift_adjunction(std::size_t n, long power) {
  Adjunction a;
  a.name = "S^" + std::to_string(power) + " -| S^" + std::to_string(-power);
  a.left = shift_functor(n, power);
  a.right = shift_functor(n, -power);
  a.phi = [power](const NFactorization& x, const NFactorization& y, const FactorMorphism& f) {
    require(f.source() == shift(x, power) && f.target() == y, ErrorKind::Precondition, "phi: wrong hom-set");
    return shift(f, -power);
  };
  a.phi_inv = [power](const NFactorization& x, const NFactorization& y, const FactorMorphism& g) {
    require(g.source() == x && g.target() == shift(y, -power), ErrorKind::Precondition, "phi_inv: wrong hom-set");
    return shift(g, power);
  };
  return a;
}

Adjunction compose_adjunctions(const Adjunction& first, const Adjunction& second) {
  Adjunction a;
  a.name = "(" + second.name + ") o (" + first.name + ")";
  a.left = then(first.left, second.left);
  a.right = then(second.right, first.right);
  auto p1 = first.phi, p2 = second.phi, q1 = first.phi_inv, q2 = second.phi_inv;
  auto l1 = first.left.obj, r2 = second.right.obj;
  a.phi = [p1, p2, l1, r2](const NFactorization& x, const NFactorization& y, const FactorMorphism& f) {
    return p1(x, r2(y), p2(l1(x), y, f));
  };
  a.phi_inv = [q1, q2, l1, r2](const NFactorization& x, const NFactorization& y, const FactorMorphism& g) {
    return q2(l1(x), y, q1(x, r2(y), g));
  };
  return a;
}

Adjunction corner_adjunction(std::size_t n) {
  // Hom(pr^0 Y, X) = Hom(S^{n-1} pr^{n-1} Y', X) with Y' = S^{-(n-1)} Y,
  // then the pr^{n-1} -| S theta^0 bijection, then S^{n-1} on F_{n+1}.
  const long s = static_cast<long>(n) - 1;
  const Adjunction base = degeneracy_face_adjunction(n, n);
  Adjunction a;
  a.name = "pr_" + std::to_string(n + 1) + "^0 -| S^" + std::to_string(n) + " theta_" + std::to_string(n) +
           "^0 S^-" + std::to_string(s);
  a.left = degeneracy_functor(n, 0);
  a.right = chain({shift_functor(n, -s), face_functor(n, 0), shift_functor(n + 1, static_cast<long>(n))}, n);
  a.right.name = "S^" + std::to_string(n) + " theta_" + std::to_string(n) + "^0 S^-" + std::to_string(s);
  auto bphi = base.phi, binv = base.phi_inv;
  a.phi = [s, bphi](const NFactorization& y, const NFactorization& x, const FactorMorphism& f) {
    require(f.source() == degeneracy(y, 0) && f.target() == x, ErrorKind::Precondition,
            "phi: morphism not in Hom(pr^0 Y, X)");
    const NFactorization yp = shift(y, -s);
    const FactorMorphism fp = shift(f, -s);
    require(fp.source() == degeneracy(yp, static_cast<std::size_t>(s)), ErrorKind::Precondition,
            "shift/degeneracy commutation failed");
    return shift(bphi(yp, shift(x, -s), fp), s);
  };
  a.phi_inv = [s, binv](const NFactorization& y, const NFactorization& x, const FactorMorphism& g) {
    const NFactorization yp = shift(y, -s);
    const FactorMorphism gp = shift(g, -s);
    return shift(binv(yp, shift(x, -s), gp), s);
  };
  return a;
}

Recollement recollement_functors(std::size_t n, std::size_t k) {
  require(n >= 2 && k >= 1 && k + 1 <= n, ErrorKind::IndexOutOfRange, "recollement needs 1 <= k <= n-1");
  Recollement r;
  r.n = n;
  r.k = k;
  const std::size_t m0 = n - k + 1;  // fold count of the kernel category

  // inc = S^{-1} theta^{n-2}_{n-1} ... theta^{n-k}_{n-k+1}
  std::vector<Adjunction> right_side, left_side;
  for (std::size_t m = m0; m < n; ++m) {
    right_side.push_back(face_degeneracy_adjunction(m, m - 1));   // theta_m^{m-1} -| pr_{m+1}^{m-1}
    left_side.push_back(degeneracy_face_adjunction(m, m - 1));    // pr_{m+1}^{m-2} -| theta_m^{m-1}
  }
  Adjunction inc_right = shift_adjunction(n, -1);
  if (!right_side.empty()) {
    Adjunction acc = right_side[0];
    for (std::size_t t = 1; t < right_side.size(); ++t) acc = compose_adjunctions(acc, right_side[t]);
    inc_right = compose_adjunctions(acc, inc_right);
  }
  r.adj_inc_right = inc_right;
  r.inc = inc_right.left;
  r.inc.name = "inc";
  r.inc_right = inc_right.right;
  r.inc_right.name = "inc_rho";

  // Left adjoint of inc: S^{-1} has left adjoint S, theta_m^{m-1} has left adjoint pr_{m+1}^{m-2}.
  Adjunction inc_left = shift_adjunction(n, 1);  // S -| S^{-1}
  for (std::size_t t = left_side.size(); t-- > 0;) inc_left = compose_adjunctions(inc_left, left_side[t]);
  r.adj_inc_left = inc_left;
  r.inc_left = inc_left.left;
  r.inc_left.name = "inc_Lambda";

  // Quotient pr^0_{k+1} ... pr^0_n with sections as adjoint composites.
  std::vector<Adjunction> ql, qr;
  for (std::size_t m = k; m < n; ++m) {
    ql.push_back(face_degeneracy_adjunction(m, 0));  // theta_m^0 -| pr_{m+1}^0
    qr.push_back(corner_adjunction(m));              // pr_{m+1}^0 -| S^m theta_m^0 S^{-(m-1)}
  }
  Adjunction quot_left = ql[0];
  for (std::size_t t = 1; t < ql.size(); ++t) quot_left = compose_adjunctions(quot_left, ql[t]);
  Adjunction quot_right = qr.back();
  for (std::size_t t = qr.size() - 1; t-- > 0;) quot_right = compose_adjunctions(quot_right, qr[t]);
  r.adj_quot_left = quot_left;
  r.adj_quot_right = quot_right;
  r.quotient = quot_left.right;
  r.quotient.name = "quotient";
  r.section_left = quot_left.left;
  r.section_left.name = "section_left";
  r.section_right = quot_right.right;
  r.section_right.name = "section_right";
  return r;
}

}  // namespace nfold
