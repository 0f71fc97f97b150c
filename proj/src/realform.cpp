#include "pkla/realform.hpp"

#include "pkla/poly.hpp"

namespace pkla {

namespace {

CVec basis(std::size_t n, std::size_t k) { return unit_vec<Complex>(n, k); }

// Matrix of a restricted to the invariant subspace with basis columns b.
template <class T>
Matrix<T> restrict_operator(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t k = b.cols();
  Matrix<T> image = a * b, out(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    auto coords = solve(b, image.column(c));
    if (!coords) throw InternalError("subspace is not invariant");
    for (std::size_t r = 0; r < k; ++r) out(r, c) = (*coords)[r];
  }
  return out;
}

Rational bilinear(const RMatrix& m, const RVec& x, const RVec& y) {
  RVec my = m * y;
  Rational s(0);
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * my[k];
  return s;
}

}  // namespace

ValidationReport validate_sigma(const APKPair& p, const SemilinearOperator& sigma) {
  ValidationReport rep;
  const std::size_t n = p.dim();
  const HermitianGram& h = p.form();
  if (!(sigma * sigma == LinearOperator::identity(n))) rep.add("sigma_involution", {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVec ei = basis(n, i), ej = basis(n, j);
      CVec l = sigma(p.product(ei, ej)), r = p.product(sigma(ei), sigma(ej));
      if (l != r) rep.add("sigma_multiplicative", {i, j}, to_string(l), to_string(r));
      Complex hl = h(sigma(ei), sigma(ej)), hr = conj(h(ei, ej));
      if (!(hl == hr)) rep.add("sigma_antiunitary", {i, j}, to_string(hl), to_string(hr));
      for (std::size_t k = 0; k < n; ++k) {
        CVec ek = basis(n, k);
        Complex a = h(p.product(ei, ej), ek), b = h(ei, p.product(sigma(ej), ek));
        if (!(a == b)) rep.add("sigma_adjoint", {i, j, k}, to_string(a), to_string(b));
      }
    }
  return rep;
}

AffForm real_form_from_basis(const APKPair& p, const CMatrix& v) {
  const std::size_t n = p.dim();
  if (v.rows() != n || v.cols() != n) throw DimensionError("real form basis has wrong shape");
  CMatrix vinv;
  try {
    vinv = inverse(v);
  } catch (const SingularError&) {
    throw PreconditionError("real form vectors are not a basis");
  }
  ValidationReport rep;
  ProductTable<Rational> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVec c = vinv * p.product(v.column(i), v.column(j));
      RVec re(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_real()) rep.add("real_products", {i, j, k}, to_string(c[k]));
        re[k] = c[k].re;
      }
      t.set_one_sided(i, j, re);
    }
  CMatrix h = transform_gram(p.form().matrix(), v);
  RMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!h(i, j).is_real()) rep.add("real_form_B", {i, j}, to_string(h(i, j)));
      b(i, j) = Rational(-1, 4) * h(i, j).re;
    }
  if (!rep.ok()) throw PreconditionError("vectors do not span a real form", rep);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("a" + std::to_string(k));
  RealSymmetricAlgebra s(t.build(labels), b);
  RMatrix iso(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    RVec x = realify(Complex(Rational(-1, 2)) * v.column(k));
    RVec y = realify(Complex(Rational(0), Rational(-1, 2)) * v.column(k));
    for (std::size_t r = 0; r < 2 * n; ++r) {
      iso(r, k) = x[r];
      iso(r, n + k) = y[r];
    }
  }
  ValidationReport iso_rep = verify_isomorphism(standard_realization(s), realize(p), iso);
  if (!iso_rep.ok()) throw InternalError("aff(A) is not isomorphic to g_U via the real form:\n" + iso_rep.to_string());
  return {std::move(s), v, std::move(iso)};
}

RealFormCertificate sigma_from_adjoints(const APKPair& p) {
  const std::size_t n = p.dim();
  if (!annihilator(p.algebra()).is_zero()) throw PreconditionError("sigma needs a trivial annihilator");
  // sigma(R*_i e_j) = R*_j e_i with sigma(v) = M conj(v): each row of M solves conj(S)^T m = t.
  std::vector<CVec> rows, targets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.push_back(conj(p.rstar(i).matrix().column(j)));
      targets.push_back(p.rstar(j).matrix().column(i));
    }
  CMatrix sbar = CMatrix::from_rows(rows, n);
  if (rank(sbar) != n) throw InternalError("R*_U U does not span U although ann(U) = 0");
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    CVec rhs;
    for (const auto& t : targets) rhs.push_back(t[r]);
    auto sol = solve(sbar, rhs);
    if (!sol) throw InternalError("sigma(R*_x y) = R*_y x is inconsistent");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = (*sol)[c];
  }
  SemilinearOperator sigma(m);
  ValidationReport rep = validate_sigma(p, sigma);
  if (!rep.ok()) throw InternalError("sigma fails its identities:\n" + rep.to_string());

  std::vector<RVec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    CVec e = basis(n, j), ie = Complex::i() * basis(n, j);
    gens.push_back(realify(e + sigma(e)));
    gens.push_back(realify(ie + sigma(ie)));
  }
  RSubspace real = RSubspace::span(gens, 2 * n);
  if (real.dim() != n) throw InternalError("fixed points of sigma have the wrong dimension");
  std::vector<CVec> cols;
  for (const auto& g : real.basis()) cols.push_back(complexify(g));
  AffForm f = real_form_from_basis(p, CMatrix::from_columns(cols, n));
  return {sigma, f.real_basis, f.S, f.iso};
}

std::optional<AnnSplit> split_ann(const APKPair& p) {
  const std::size_t n = p.dim();
  CSubspace ann = annihilator(p.algebra());
  CSubspace perp = orthogonal_complement(p.form(), ann);
  if (!ann.intersect(perp).is_zero()) return std::nullopt;
  const std::size_t a = ann.dim(), m = perp.dim();
  std::vector<CVec> cols = ann.basis();
  cols.insert(cols.end(), perp.basis().begin(), perp.basis().end());
  CMatrix q = CMatrix::from_columns(cols, n);
  APKPair t = transform_pair(p, q);
  const CMatrix& g = t.form().matrix();
  CMatrix ga(a, a), gp(m, m);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) ga(i, j) = g(i, j);
  ProductTable<Complex> tp(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      gp(i, j) = g(a + i, a + j);
      CVec v(m);
      for (std::size_t k = 0; k < m; ++k) v[k] = t.algebra().c(a + i, a + j, a + k);
      tp.set_one_sided(i, j, v);
    }
  AnnSplit out{APKPair(AssocAlgebra::zero(a), HermitianGram(ga)), APKPair(tp.build(), HermitianGram(gp)), q};
  if (!(direct_sum(out.ann_part, out.perp_part) == t))
    throw InternalError("ann(U) and its complement do not split U as orthogonal ideals");
  return out;
}

std::optional<AffForm> detect_aff(const APKPair& p) {
  auto split = split_ann(p);
  if (!split) return std::nullopt;
  const std::size_t n = p.dim(), a = split->ann_part.dim();
  CMatrix v(n, n);
  // ann part: orthogonal basis of H, conjugation in it is the involution.
  CMatrix w = diagonalizing_basis(split->ann_part.form().matrix());
  CMatrix perp_basis(n, n - a);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n - a; ++c) perp_basis(r, c) = split->basis_change(r, a + c);
  CMatrix ann_basis(n, a);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < a; ++c) ann_basis(r, c) = split->basis_change(r, c);
  CMatrix va = ann_basis * w;
  CMatrix vp(n, 0);
  if (n > a) vp = perp_basis * sigma_from_adjoints(split->perp_part).real_basis;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < a; ++c) v(r, c) = va(r, c);
    for (std::size_t c = 0; c < n - a; ++c) v(r, a + c) = vp(r, c);
  }
  return real_form_from_basis(p, v);
}

ValidationReport verify_unital_decomposition(const RealSymmetricAlgebra& s, const std::vector<RVec>& idempotents) {
  ValidationReport rep;
  const RealAlgebra& a = s.algebra();
  const std::size_t d = a.dim();
  for (const auto& e : idempotents)
    if (e.size() != d) {
      rep.add("dimension", {d, e.size()});
      return rep;
    }
  RSubspace ann = annihilator(a);
  std::vector<RSubspace> ideals;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    const RVec& e = idempotents[i];
    if (a.product(e, e) != e) rep.add("idempotent", {i}, to_string(a.product(e, e)), to_string(e));
    std::vector<RVec> gens;
    for (std::size_t k = 0; k < d; ++k) gens.push_back(a.product(e, unit_vec<Rational>(d, k)));
    ideals.push_back(RSubspace::span(gens, d));
    for (const auto& w : ideals.back().basis())
      if (a.product(e, w) != w) rep.add("unital", {i}, to_string(a.product(e, w)), to_string(w));
    for (std::size_t j = 0; j < i; ++j)
      if (!is_zero(a.product(idempotents[j], e))) rep.add("mutually_annihilating", {j, i});
  }
  auto orthogonal = [&](const RSubspace& x, const RSubspace& y) {
    for (const auto& u : x.basis())
      for (const auto& w : y.basis())
        if (!is_zero(bilinear(s.form(), u, w))) return false;
    return true;
  };
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!orthogonal(ideals[i], ann)) rep.add("orthogonal_to_ann", {i});
    for (std::size_t j = 0; j < i; ++j)
      if (!orthogonal(ideals[i], ideals[j])) rep.add("orthogonal", {j, i});
  }
  RSubspace total = ann;
  std::size_t dims = ann.dim();
  for (const auto& w : ideals) {
    total = total + w;
    dims += w.dim();
  }
  if (total.dim() != d)
    rep.add("spanning", {}, "dim(ann + sum e_i A) = " + std::to_string(total.dim()), "dim A = " + std::to_string(d));
  else if (dims != d)
    rep.add("direct", {}, "sum of dims = " + std::to_string(dims), "dim A = " + std::to_string(d));
  return rep;
}

std::optional<std::vector<RVec>> split_units(const RealSymmetricAlgebra& s) {
  const RealAlgebra& a = s.algebra();
  const std::size_t d = a.dim();
  RSubspace ann = annihilator(a);
  // B-orthogonal complement of ann: {x : B(x, w) = 0 for w in ann}.
  std::vector<RVec> eqs;
  for (const auto& w : ann.basis()) eqs.push_back(s.form() * w);
  RSubspace perp = eqs.empty() ? RSubspace::whole(d) : RSubspace::null_space(RMatrix::from_rows(eqs, d));
  if (!ann.intersect(perp).is_zero()) return std::nullopt;

  std::vector<RSubspace> pieces;
  if (!perp.is_zero()) pieces.push_back(perp);
  for (std::size_t k = 0; k < d; ++k) {
    RMatrix rk = a.basis_right_mult(k);
    std::vector<RSubspace> next;
    for (const auto& w : pieces) {
      RMatrix b = RMatrix::from_columns(w.basis(), d);
      RMatrix op = restrict_operator(rk, b);
      std::size_t covered = 0;
      for (const auto& lambda : rational_roots(char_poly(op))) {
        std::vector<RVec> vs;
        for (const auto& c : generalized_eigenspace(op, lambda)) vs.push_back(b * c);
        covered += vs.size();
        next.push_back(RSubspace::span(vs, d));
      }
      if (covered != w.dim()) return std::nullopt;
    }
    pieces = std::move(next);
  }
  std::vector<RVec> units;
  for (const auto& w : pieces) {
    // e in w with e y = y for all y in w.
    const auto& bs = w.basis();
    std::vector<RVec> rows;
    RVec rhs;
    for (const auto& y : bs)
      for (std::size_t r = 0; r < d; ++r) {
        RVec row;
        for (const auto& x : bs) row.push_back(a.product(x, y)[r]);
        rows.push_back(row);
        rhs.push_back(y[r]);
      }
    auto c = solve(RMatrix::from_rows(rows, bs.size()), rhs);
    if (!c) return std::nullopt;
    units.push_back(RMatrix::from_columns(bs, d) * *c);
  }
  return units;
}

}  // namespace pkla
