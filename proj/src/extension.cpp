#include "pkla/extension.hpp"

#include <algorithm>

namespace pkla {

namespace {

CVec basis(std::size_t n, std::size_t k) { return unit_vec<Complex>(n, k); }

std::string fresh_label(const std::vector<std::string>& used, const std::string& stem) {
  for (std::size_t k = 0;; ++k) {
    std::string s = stem + std::to_string(k);
    if (std::find(used.begin(), used.end(), s) == used.end()) return s;
  }
}

std::size_t first_nonzero(const CVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) return k;
  return v.size();
}

}  // namespace

DoubleExtensionData DoubleExtensionData::trivial(std::size_t n, Complex eps, Complex alpha0) {
  return {LinearOperator::zero(n), SemilinearOperator::zero(n), zero_vec<Complex>(n), zero_vec<Complex>(n),
          std::move(eps), std::move(alpha0)};
}

ValidationReport validate_extension_data(const APKPair& p, const DoubleExtensionData& d) {
  ValidationReport rep;
  const std::size_t n = p.dim();
  if (d.D.dim() != n || d.tau.dim() != n || d.a0.size() != n || d.b0.size() != n) {
    rep.add("dimension", {n});
    return rep;
  }
  const HermitianGram& h = p.form();
  const LinearOperator id = LinearOperator::identity(n);
  const LinearOperator dstar = h_adjoint(d.D, h);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVec lhs = d.D(p.product(basis(n, i), basis(n, j)));
      CVec rhs = p.product(d.D(basis(n, i)), basis(n, j));
      if (lhs != rhs) rep.add("D_multiplicative", {i, j}, to_string(lhs), to_string(rhs));
      Complex hl = h(basis(n, i), d.tau(basis(n, j)));
      Complex hr = conj(h(d.tau(basis(n, i)), basis(n, j)));
      if (!(hl == hr)) rep.add("tau_hermitian", {i, j}, to_string(hl), to_string(hr));
    }
  if (!(d.D * d.D - d.eps * d.D == p.r(d.a0))) rep.add("D_quadratic", {}, "D^2 - eps D", "R_a0");
  {
    CVec lhs = d.tau(d.a0), rhs = (dstar - conj(d.eps) * id)(d.b0);
    if (lhs != rhs) rep.add("tau_a0", {}, to_string(lhs), to_string(rhs));
  }
  if (!(d.tau * d.tau == d.D * dstar)) rep.add("tau_squared", {}, "tau^2", "D D*");
  if (!(d.D * dstar == p.r(d.b0))) rep.add("D_Dstar", {}, "D D*", "R_b0");
  {
    CVec lhs = d.tau(d.b0), rhs = d.D(d.b0);
    if (lhs != rhs) rep.add("tau_b0", {}, to_string(lhs), to_string(rhs));
  }
  if (!(d.D * d.tau == d.tau * dstar)) rep.add("D_tau", {}, "D tau", "tau D*");
  for (std::size_t j = 0; j < n; ++j) {
    if (!(d.tau * p.rstar(j) == p.r(j) * d.tau)) rep.add("tau_Rstar", {j}, "tau R*_x", "R_x tau");
    if (!(d.tau * p.r(j) == p.rstar(j) * d.tau)) rep.add("tau_R", {j}, "tau R_x", "R*_x tau");
    if (!(d.D * p.rstar(j) == p.r(d.tau(basis(n, j))))) rep.add("D_Rstar", {j}, "D R*_x", "R_(tau x)");
    CVec lhs = d.tau(d.D(basis(n, j))), rhs = p.rstar(j)(d.b0);
    if (lhs != rhs) rep.add("tau_D", {j}, to_string(lhs), to_string(rhs));
  }
  return rep;
}

APKPair double_extend(const APKPair& p, const DoubleExtensionData& d) {
  ValidationReport rep = validate_extension_data(p, d);
  if (!rep.ok()) throw PreconditionError("extension data violates the double extension hypotheses", rep);
  const std::size_t n = p.dim(), N = n + 2;
  const HermitianGram& h = p.form();
  auto embed = [&](const Complex& cv, const CVec& x, const Complex& cu) {
    CVec out(N, Complex(0));
    out[0] = cv;
    for (std::size_t k = 0; k < n; ++k) out[1 + k] = x[k];
    out[N - 1] = cu;
    return out;
  };
  ProductTable<Complex> t(N);
  t.set(0, 0, embed(d.eps, d.a0, d.alpha0));
  for (std::size_t j = 0; j < n; ++j) {
    t.set(0, 1 + j, embed(0, d.D(basis(n, j)), h(basis(n, j), d.b0)));
    for (std::size_t i = 0; i < n; ++i)
      t.set_one_sided(1 + i, 1 + j,
                      embed(0, p.product(basis(n, i), basis(n, j)), h(basis(n, i), d.tau(basis(n, j)))));
  }
  CMatrix g(N, N);
  g(0, N - 1) = g(N - 1, 0) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(1 + i, 1 + j) = h.at(i, j);
  std::vector<std::string> labels{fresh_label(p.algebra().labels(), "v")};
  for (const auto& l : p.algebra().labels()) labels.push_back(l);
  labels.push_back(fresh_label(p.algebra().labels(), "u"));
  try {
    return {t.build(labels), HermitianGram(g)};
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("double extension is not APK-compatible:\n") + e.report().to_string());
  }
}

AssocAlgebra central_extension(const AssocAlgebra& u, const CMatrix& phi) {
  const std::size_t n = u.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionError("phi has wrong shape");
  ValidationReport rep;
  if (!(phi.transpose() == phi)) rep.add("phi_symmetric", {});
  auto form = [&](const CVec& x, const CVec& y) {
    CVec fy = phi * y;
    Complex s(0);
    for (std::size_t k = 0; k < n; ++k) s += x[k] * fy[k];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Complex l = form(u.product(basis(n, i), basis(n, j)), basis(n, k));
        Complex r = form(basis(n, i), u.product(basis(n, j), basis(n, k)));
        if (!(l == r)) rep.add("phi_invariant", {i, j, k}, to_string(l), to_string(r));
      }
  if (!rep.ok()) throw PreconditionError("phi is not an invariant symmetric form", rep);
  ProductTable<Complex> t(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVec v = u.product(basis(n, i), basis(n, j));
      v.push_back(phi(i, j));
      t.set_one_sided(i, j, v);
    }
  std::vector<std::string> labels = u.labels();
  labels.push_back(fresh_label(labels, "u"));
  return t.build(labels);
}

AssocAlgebra semidirect(const AssocAlgebra& u, const LinearOperator& delta, const CVec& x0, const Complex& eps) {
  const std::size_t n = u.dim();
  if (delta.dim() != n || x0.size() != n) throw DimensionError("semidirect data has wrong shape");
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVec l = delta(u.product(basis(n, i), basis(n, j)));
      CVec r = u.product(delta(basis(n, i)), basis(n, j));
      if (l != r) rep.add("delta_multiplicative", {i, j}, to_string(l), to_string(r));
    }
  if (!(delta * delta - eps * delta == LinearOperator(u.right_mult_matrix(x0))))
    rep.add("delta_quadratic", {}, "delta^2 - eps delta", "R_x0");
  if (!rep.ok()) throw PreconditionError("invalid semidirect product data", rep);
  ProductTable<Complex> t(n + 1);
  auto embed = [&](const Complex& cv, const CVec& x) {
    CVec out{cv};
    out.insert(out.end(), x.begin(), x.end());
    return out;
  };
  t.set(0, 0, embed(eps, x0));
  for (std::size_t j = 0; j < n; ++j) {
    t.set(0, 1 + j, embed(0, delta(basis(n, j))));
    for (std::size_t i = 0; i < n; ++i) t.set_one_sided(1 + i, 1 + j, embed(0, u.product(basis(n, i), basis(n, j))));
  }
  std::vector<std::string> labels{fresh_label(u.labels(), "v")};
  for (const auto& l : u.labels()) labels.push_back(l);
  return t.build(labels);
}

ValidationReport validate_certificate(const APKPair& p, const ReductionCertificate& c) {
  ValidationReport rep;
  const std::size_t n = p.dim();
  const HermitianGram& h = p.form();
  if (c.u0.size() != n || c.v0.size() != n || c.lambda.size() != n) {
    rep.add("dimension", {n});
    return rep;
  }
  CSubspace ann = annihilator(p.algebra());
  if (is_zero(c.u0)) rep.add("u0_nonzero", {});
  if (!ann.contains(c.u0)) rep.add("u0_in_ann", {}, to_string(c.u0));
  if (!orthogonal_complement(h, ann).contains(c.u0)) rep.add("u0_in_rstar_span", {}, to_string(c.u0));
  for (std::size_t j = 0; j < n; ++j) {
    CVec l = p.rstar(j)(c.u0), r = c.lambda[j] * c.u0;
    if (l != r) rep.add("u0_eigenvector", {j}, to_string(l), to_string(r));
  }
  if (!is_zero(h(c.u0, c.u0))) rep.add("u0_isotropic", {}, to_string(h(c.u0, c.u0)), "0");
  if (!is_zero(h(c.v0, c.v0))) rep.add("v0_isotropic", {}, to_string(h(c.v0, c.v0)), "0");
  if (!(h(c.u0, c.v0) == Complex(1))) rep.add("u0_v0_pairing", {}, to_string(h(c.u0, c.v0)), "1");
  if (c.basis_change.rows() != n || c.basis_change.cols() != n || is_zero(determinant(c.basis_change)))
    rep.add("basis_change_invertible", {});
  return rep;
}

ReductionCertificate certificate_for(const APKPair& p, const CVec& u0) {
  const std::size_t n = p.dim();
  const HermitianGram& h = p.form();
  if (u0.size() != n) throw DimensionError("u0 has wrong size");
  std::size_t k = first_nonzero(u0);
  if (k == n) throw PreconditionError("u0 must be nonzero");
  ReductionCertificate c;
  c.u0 = u0;
  for (std::size_t j = 0; j < n; ++j) c.lambda.push_back(p.rstar(j)(u0)[k] / u0[k]);
  // H(u0, v) = r . conj(v) with r = u0^T G; take the first pivot of r.
  CVec r = h.matrix().transpose() * u0;
  std::size_t piv = first_nonzero(r);
  if (piv == n) throw PreconditionError("u0 is in the radical of H");
  CVec v = conj(inverse(r[piv])) * basis(n, piv);
  c.v0 = v - (Rational(1, 2) * h(v, v)) * u0;
  std::vector<CVec> cols{c.v0};
  const CSubspace rest = orthogonal_complement(h, CSubspace::span({u0, c.v0}, n));
  cols.insert(cols.end(), rest.basis().begin(), rest.basis().end());
  cols.push_back(u0);
  c.basis_change = CMatrix::from_columns(cols, n);
  ValidationReport rep = validate_certificate(p, c);
  if (!rep.ok()) throw PreconditionError("u0 does not give a reduction certificate", rep);
  return c;
}

std::optional<ReductionCertificate> find_reduction_vector(const APKPair& p) {
  const std::size_t n = p.dim();
  CSubspace ann = annihilator(p.algebra());
  CSubspace w = ann.intersect(orthogonal_complement(p.form(), ann));
  if (w.is_zero()) return std::nullopt;
  // The R*_{e_j} commute (R*_x R*_y = R*_{xy}); cut w down to a common eigenspace.
  for (std::size_t j = 0; j < n && w.dim() > 1; ++j) {
    const std::size_t k = w.dim();
    CMatrix b = CMatrix::from_columns(w.basis(), n);
    CMatrix image = p.rstar(j).matrix() * b;
    CMatrix a(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      auto coords = solve(b, image.column(c));
      if (!coords) throw InternalError("R*_x does not preserve ann(U) meet its complement");
      for (std::size_t r = 0; r < k; ++r) a(r, c) = (*coords)[r];
    }
    Complex lambda(0);
    if (!is_nilpotent_matrix(a)) {
      Poly<Complex> cp = char_poly(a);
      auto roots = gaussian_roots(cp);
      if (roots.empty()) throw EigenvalueOutsideField(poly_to_string(cp));
      lambda = roots.front();
    }
    std::vector<CVec> eig;
    for (const auto& v : kernel(a - lambda * CMatrix::identity(k))) eig.push_back(b * v);
    w = CSubspace::span(eig, n);
  }
  return certificate_for(p, w.basis().front());
}

Reduction reduce_at(const APKPair& p, const CVec& u0) {
  ReductionCertificate cert = certificate_for(p, u0);
  const std::size_t N = p.dim(), n = N - 2;
  APKPair q = transform_pair(p, cert.basis_change);
  const AssocAlgebra& a = q.algebra();
  const CMatrix& g = q.form().matrix();

  ValidationReport shape;
  if (!is_zero(g(0, 0)) || !(g(0, N - 1) == Complex(1)) || !is_zero(g(N - 1, N - 1))) shape.add("gram_hyperbolic", {});
  for (std::size_t k = 0; k < n; ++k)
    if (!is_zero(g(0, 1 + k)) || !is_zero(g(N - 1, 1 + k))) shape.add("gram_orthogonal", {k});
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (!is_zero(a.c(N - 1, j, i))) shape.add("u0_annihilates", {j, i});
      if (i > 0 && !is_zero(a.c(i, j, 0))) shape.add("no_v0_component", {i, j});
    }
  if (!shape.ok()) throw InternalError("reduced coordinates lack the extension shape:\n" + shape.to_string());

  ProductTable<Complex> t(n);
  CMatrix g1(n, n), phi_mat(n, n), dmat(n, n);
  CVec phi(n), a0(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CVec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = a.c(1 + i, 1 + j, 1 + k);
      t.set_one_sided(i, j, v);
      g1(i, j) = g(1 + i, 1 + j);
      phi_mat(i, j) = a.c(1 + i, 1 + j, N - 1);
      dmat(j, i) = a.c(0, 1 + i, 1 + j);
    }
    phi[i] = a.c(0, 1 + i, N - 1);
    a0[i] = a.c(0, 0, 1 + i);
  }
  APKPair reduced;
  try {
    reduced = APKPair(t.build(), HermitianGram(g1));
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("reduced pair is not APK-compatible:\n") + e.report().to_string());
  }
  const CMatrix g1inv = inverse(g1);
  DoubleExtensionData data{LinearOperator(dmat), SemilinearOperator(conj(g1inv * phi_mat)), a0,
                           conj(g1inv * phi), a.c(0, 0, 0), a.c(0, 0, N - 1)};
  ValidationReport rep = validate_extension_data(reduced, data);
  if (!rep.ok()) throw InternalError("extracted extension data fails the hypotheses:\n" + rep.to_string());
  if (!(double_extend(reduced, data) == q)) throw InternalError("double extension does not rebuild the reduced pair");
  return {std::move(reduced), std::move(data), std::move(cert)};
}

Reduction reduce(const APKPair& p) {
  auto cert = find_reduction_vector(p);
  if (!cert) throw PreconditionError("ann(U) meets its orthogonal complement trivially; nothing to reduce");
  return reduce_at(p, cert->u0);
}

APKPair replay(const Tower& t) {
  APKPair cur = t.base;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it)
    cur = transform_pair(double_extend(cur, it->data), inverse(it->cert.basis_change));
  return cur;
}

Tower tower(const APKPair& p) {
  Tower t{p, {}, std::nullopt};
  while (true) {
    try {
      auto cert = find_reduction_vector(t.base);
      if (!cert) break;
      Reduction r = reduce_at(t.base, cert->u0);
      t.base = r.reduced;
      t.steps.push_back(std::move(r));
    } catch (const EigenvalueOutsideField& e) {
      t.diagnostic = e.what();
      break;
    }
  }
  if (!(replay(t) == p)) throw InternalError("replaying the tower does not rebuild the input pair");
  return t;
}

}  // namespace pkla
