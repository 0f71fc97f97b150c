#include "pkla/liereal.hpp"

namespace pkla {

namespace {

Rational bilinear(const RMatrix& m, const RVec& x, const RVec& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j]) && !is_zero(m(i, j))) s += x[i] * m(i, j) * y[j];
  }
  return s;
}

RVec basis_vec(std::size_t m, std::size_t k) { return unit_vec<Rational>(m, k); }

// Complex coordinates of the k-th vector of the canonical real chart.
CVec chart_vector(std::size_t n, std::size_t k) {
  CVec v(n, Complex(0));
  if (k < n)
    v[k] = Complex(1);
  else
    v[k - n] = Complex::i();
  return v;
}

bool is_skew(const RMatrix& m) { return m.transpose() == -m; }

}  // namespace

ValidationReport validate_lie(const RealLie& l) {
  ValidationReport rep;
  const std::size_t m = l.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!(l.c(i, j, k) == -l.c(j, i, k)))
          rep.add("bracket_skew", {i, j, k}, to_string(l.c(i, j, k)), to_string(Rational(-l.c(j, i, k))));
  std::vector<RMatrix> ad;
  for (std::size_t i = 0; i < m; ++i) ad.push_back(l.ad(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        RVec s = ad[i] * ad[j].column(k) + ad[j] * ad[k].column(i) + ad[k] * ad[i].column(j);
        if (!is_zero(s)) rep.add("jacobi", {i, j, k}, to_string(s), to_string(zero_vec<Rational>(m)));
      }
  return rep;
}

Algebra<Rational> lsa_from_omega(const RealLie& lie, const RMatrix& omega) {
  const std::size_t m = lie.dim();
  RMatrix wt_inv;
  try {
    wt_inv = inverse(omega.transpose());
  } catch (const SingularError&) {
    throw DegenerateFormError("symplectic form is degenerate");
  }
  ProductTable<Rational> table(m);
  for (std::size_t i = 0; i < m; ++i) {
    // r_s = -omega(e_j, [e_i, e_s]) is minus row j of omega * ad(e_i).
    RMatrix w_ad = omega * lie.ad(i);
    for (std::size_t j = 0; j < m; ++j) table.set_one_sided(i, j, wt_inv * (-w_ad.row(j)));
  }
  return table.build(lie.labels());
}

LieRealization make_realization(RealLie lie, RMatrix J, RMatrix omega) {
  const std::size_t m = lie.dim();
  if (J.rows() != m || J.cols() != m || omega.rows() != m || omega.cols() != m)
    throw DimensionError("J and omega must match the Lie algebra dimension");
  LieRealization l;
  l.lsa = lsa_from_omega(lie, omega);
  l.gmat = J.transpose() * omega;
  l.lie = std::move(lie);
  l.J = std::move(J);
  l.omega = std::move(omega);
  return l;
}

ValidationReport validate_pk(const LieRealization& l) {
  ValidationReport rep = validate_lie(l.lie);
  const std::size_t m = l.dim();
  const RMatrix id = RMatrix::identity(m);
  if (l.J.rows() != m || l.omega.rows() != m || l.gmat.rows() != m || l.lsa.dim() != m) {
    rep.add("dimension", {m});
    return rep;
  }

  if (!(l.J * l.J == -id)) rep.add("J_squared", {}, "J^2", "-id");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RVec lhs = l.lie.bracket(l.J.column(i), l.J.column(j));
      RVec rhs = l.lie.ad(i).column(j);
      if (lhs != rhs) rep.add("abelian_J", {i, j}, to_string(lhs), to_string(rhs));
    }

  if (!is_skew(l.omega)) rep.add("omega_skew", {});
  if (is_zero(determinant(l.omega))) rep.add("omega_degenerate", {});
  std::vector<RMatrix> ad;
  for (std::size_t i = 0; i < m; ++i) ad.push_back(l.lie.ad(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Rational s = bilinear(l.omega, ad[i].column(j), basis_vec(m, k)) +
                     bilinear(l.omega, ad[j].column(k), basis_vec(m, i)) +
                     bilinear(l.omega, ad[k].column(i), basis_vec(m, j));
        if (!is_zero(s)) rep.add("cocycle", {i, j, k}, to_string(s), "0");
      }
  if (!(l.J.transpose() * l.omega * l.J == l.omega)) rep.add("omega_J_invariant", {});

  if (!(l.gmat == l.J.transpose() * l.omega)) rep.add("metric_definition", {});
  if (!(l.gmat.transpose() == l.gmat)) rep.add("metric_symmetric", {});

  std::vector<RMatrix> left;  // z -> e_i . z
  for (std::size_t i = 0; i < m; ++i) left.push_back(l.lsa.basis_right_mult(i));
  RMatrix wt = l.omega.transpose();
  for (std::size_t i = 0; i < m; ++i) {
    RMatrix w_ad = l.omega * ad[i];
    for (std::size_t j = 0; j < m; ++j) {
      RVec lhs = wt * left[i].column(j);
      RVec rhs = -w_ad.row(j);
      if (lhs != rhs) rep.add("lsa_definition", {i, j}, to_string(lhs), to_string(rhs));
      RVec comm = left[i].column(j) - left[j].column(i);
      if (comm != ad[i].column(j)) rep.add("lsa_commutator", {i, j}, to_string(comm), to_string(ad[i].column(j)));
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RMatrix lhs(m, m);
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(l.lie.c(i, j, k))) lhs += l.lie.c(i, j, k) * left[k];
      RMatrix rhs = left[i] * left[j] - left[j] * left[i];
      if (!(lhs == rhs)) rep.add("left_symmetry", {i, j});
    }
  for (std::size_t i = 0; i < m; ++i) {
    RMatrix rhs(m, m);
    for (std::size_t k = 0; k < m; ++k)
      if (!is_zero(l.J(k, i))) rhs += l.J(k, i) * left[k];
    if (!(l.J * left[i] == rhs)) rep.add("lsa_J", {i});
  }
  if (!is_two_step_solvable(l.lie)) rep.add("two_step_solvable", {});
  return rep;
}

RMatrix canonical_J(std::size_t n) {
  RMatrix J(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    J(n + k, k) = 1;
    J(k, n + k) = -1;
  }
  return J;
}

LieRealization realize(const APKPair& p) {
  const std::size_t n = p.dim(), m = 2 * n;
  std::vector<CVec> f;
  std::vector<LinearOperator> rs;
  for (std::size_t k = 0; k < m; ++k) {
    f.push_back(chart_vector(n, k));
    rs.push_back(p.rstar(f.back()));
  }
  ProductTable<Rational> table(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      RVec v = realify(rs[b](f[a]) - rs[a](f[b]));
      table.set_one_sided(a, b, v);
      table.set_one_sided(b, a, -v);
    }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < m; ++k)
    labels.push_back(k < n ? p.algebra().labels()[k] : "i" + p.algebra().labels()[k - n]);
  RMatrix omega(m, m), re(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Complex h = p.form()(f[a], f[b]);
      omega(a, b) = h.im;
      re(a, b) = h.re;
    }
  LieRealization l = make_realization(RealLie(table.build(labels)), canonical_J(n), omega);
  if (!(l.gmat == re)) throw InternalError("metric of g_U is not the real part of H");
  return l;
}

LieRealization build_lie(const APKPair& p) {
  LieRealization l = realize(p);
  ValidationReport rep = validate_pk(l);
  if (!rep.ok()) throw InternalError("g_U fails the pseudo-Kahler identities:\n" + rep.to_string());
  return l;
}

AffLie aff(const RealAlgebra& a) {
  const std::size_t d = a.dim(), m = 2 * d;
  ProductTable<Rational> table(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RVec v(m, Rational(0));
      for (std::size_t k = 0; k < d; ++k) v[d + k] = a.c(i, j, k);
      table.set_one_sided(i, d + j, v);
      table.set_one_sided(d + j, i, -v);
    }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k) labels.push_back("(" + a.labels()[k] + ",0)");
  for (std::size_t k = 0; k < d; ++k) labels.push_back("(0," + a.labels()[k] + ")");
  return {RealLie(table.build(labels)), canonical_J(d)};
}

ValidationReport validate_symmetric(const RealAlgebra& a, const RMatrix& b) {
  ValidationReport rep = validate_assoc(a);
  const std::size_t d = a.dim();
  if (b.rows() != d || b.cols() != d) {
    rep.add("dimension", {d, b.rows(), b.cols()});
    return rep;
  }
  if (!(b.transpose() == b)) rep.add("B_symmetric", {});
  if (is_zero(determinant(b))) rep.add("B_degenerate", {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Rational lhs = bilinear(b, a.basis_right_mult(j).column(i), basis_vec(d, k));
        Rational rhs = bilinear(b, basis_vec(d, i), a.basis_right_mult(j).column(k));
        if (!(lhs == rhs)) rep.add("B_invariant", {i, j, k}, to_string(lhs), to_string(rhs));
      }
  return rep;
}

RealSymmetricAlgebra::RealSymmetricAlgebra(RealAlgebra a, RMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  ValidationReport rep = validate_symmetric(a_, b_);
  if (!rep.ok()) throw PreconditionError("not a symmetric commutative associative algebra", rep);
}

LieRealization standard_realization(const RealSymmetricAlgebra& s) {
  const std::size_t d = s.dim(), m = 2 * d;
  AffLie af = aff(s.algebra());
  RMatrix omega(m, m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      omega(i, d + j) = s.form()(i, j);
      omega(d + i, j) = -s.form()(i, j);
    }
  return make_realization(af.lie, af.J, omega);
}

LieRealization standard_pk(const RealSymmetricAlgebra& s) {
  const std::size_t d = s.dim(), m = 2 * d;
  LieRealization l = standard_realization(s);
  ValidationReport rep = validate_pk(l);
  // (a,b).(a',b') = -(aa', ba')
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RVec expect(m, Rational(0));
      if (j < d)
        for (std::size_t k = 0; k < d; ++k) expect[(i < d ? 0 : d) + k] = -s.algebra().c(i % d, j, k);
      RVec got = l.lsa.basis_right_mult(i).column(j);
      if (got != expect) rep.add("standard_lsa", {i, j}, to_string(got), to_string(expect));
    }
  if (!rep.ok()) throw InternalError("standard structure on aff(A) is not pseudo-Kahler:\n" + rep.to_string());
  return l;
}

ValidationReport verify_isomorphism(const LieRealization& l1, const LieRealization& l2, const RMatrix& phi) {
  ValidationReport rep;
  const std::size_t m = l1.dim();
  if (l2.dim() != m || phi.rows() != m || phi.cols() != m) {
    rep.add("dimension", {m, l2.dim()});
    return rep;
  }
  if (is_zero(determinant(phi))) rep.add("iso_singular", {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RVec lhs = phi * l1.lie.ad(i).column(j);
      RVec rhs = l2.lie.bracket(phi.column(i), phi.column(j));
      if (lhs != rhs) rep.add("iso_bracket", {i, j}, to_string(lhs), to_string(rhs));
    }
  if (!(phi * l1.J == l2.J * phi)) rep.add("iso_J", {});
  if (!(phi.transpose() * l2.omega * phi == l1.omega)) rep.add("iso_omega", {});
  return rep;
}

ComplexifiedPair complexify_pair(const RealSymmetricAlgebra& s) {
  const std::size_t d = s.dim();
  CMatrix g = to_complex(Rational(-4) * s.form());
  ComplexifiedPair out{APKPair(complexify(s.algebra()), HermitianGram(g)), Rational(-1, 2) * RMatrix::identity(2 * d)};
  ValidationReport rep = verify_isomorphism(standard_realization(s), realize(out.pair), out.iso);
  if (!rep.ok()) throw InternalError("complexified pair is not isomorphic to aff(A):\n" + rep.to_string());
  return out;
}

RMatrix adapted_basis(const RMatrix& J) {
  const std::size_t m = J.rows();
  if (m % 2) throw DimensionError("complex structure on odd-dimensional space");
  std::vector<RVec> xs, jxs;
  RSubspace w = RSubspace::zero(m);
  for (std::size_t k = 0; k < m && 2 * xs.size() < m; ++k) {
    RVec e = basis_vec(m, k);
    if (w.contains(e)) continue;
    xs.push_back(e);
    jxs.push_back(J * e);
    w = w + RSubspace::span({e, jxs.back()}, m);
  }
  std::vector<RVec> cols = xs;
  cols.insert(cols.end(), jxs.begin(), jxs.end());
  RMatrix q = RMatrix::from_columns(cols, m);
  if (rank(q) != m) throw PreconditionError("J is not a complex structure");
  return q;
}

RealLie transform_lie(const RealLie& l, const RMatrix& q) { return RealLie(change_basis(l.table(), q)); }

LieRealization transform_realization(const LieRealization& l, const RMatrix& q) {
  RMatrix qinv = inverse(q);
  LieRealization out;
  out.lie = transform_lie(l.lie, q);
  out.J = qinv * l.J * q;
  out.omega = q.transpose() * l.omega * q;
  out.gmat = q.transpose() * l.gmat * q;
  out.lsa = change_basis(l.lsa, q);
  return out;
}

PairFromPK pair_from_pk(const LieRealization& l) {
  ValidationReport rep = validate_pk(l);
  if (!rep.ok()) throw PreconditionError("input is not an abelian pseudo-Kahler Lie algebra", rep);
  const std::size_t m = l.dim(), n = m / 2;
  RMatrix q = adapted_basis(l.J);
  LieRealization a = transform_realization(l, q);
  if (!(a.J == canonical_J(n))) throw InternalError("adapted basis does not put J in canonical form");
  ProductTable<Complex> table(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      RVec z = Rational(1, 2) * (a.lsa.basis_right_mult(j).column(k) - a.lsa.basis_right_mult(n + j).column(n + k));
      table.set_one_sided(j, k, complexify(z));
    }
  CMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) g(j, k) = Complex(-a.omega(j, n + k), a.omega(j, k));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j) labels.push_back("u" + std::to_string(j));
  AssocAlgebra u = table.build(labels);
  ValidationReport pre = validate_assoc(u);
  HermitianGram h(g);
  if (pre.ok()) pre.merge(check_apk(u, h));
  if (!pre.ok()) throw InternalError("inverse construction produced an incompatible pair:\n" + pre.to_string());
  PairFromPK out{APKPair(std::move(u), std::move(h)), q, inverse(q)};
  ValidationReport iso = verify_isomorphism(l, realize(out.pair), out.iso);
  if (!iso.ok()) throw InternalError("inverse construction is not isomorphic to its input:\n" + iso.to_string());
  return out;
}

CocycleSpace cocycle_space(const RealLie& l) {
  const std::size_t m = l.dim();
  // Unknowns omega(e_p, e_q) for p < q.
  std::vector<std::size_t> index(m * m, 0);
  std::size_t unknowns = 0;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) index[p * m + q] = unknowns++;
  auto add_term = [&](RVec& row, const RVec& v, std::size_t r) {
    // omega(v, e_r) = sum_s v_s omega(e_s, e_r)
    for (std::size_t s = 0; s < m; ++s) {
      if (is_zero(v[s]) || s == r) continue;
      if (s < r)
        row[index[s * m + r]] += v[s];
      else
        row[index[r * m + s]] -= v[s];
    }
  };
  std::vector<RVec> rows;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) {
        RVec row(unknowns, Rational(0));
        add_term(row, l.ad(p).column(q), r);
        add_term(row, l.ad(q).column(r), p);
        add_term(row, l.ad(r).column(p), q);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<RVec> sols;
  if (rows.empty()) {
    for (std::size_t k = 0; k < unknowns; ++k) sols.push_back(basis_vec(unknowns, k));
  } else {
    sols = kernel(RMatrix::from_rows(rows, unknowns));
  }
  CocycleSpace out;
  std::vector<RVec> radical_eqs;
  for (const auto& s : sols) {
    RMatrix w(m, m);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        w(p, q) = s[index[p * m + q]];
        w(q, p) = -w(p, q);
      }
    for (std::size_t r = 0; r < m; ++r) radical_eqs.push_back(w.row(r));
    out.basis.push_back(std::move(w));
  }
  RSubspace radical = radical_eqs.empty() ? RSubspace::whole(m)
                                          : RSubspace::null_space(RMatrix::from_rows(radical_eqs, m));
  if (!radical.is_zero()) out.certificate = radical.basis().front();
  return out;
}

bool is_unimodular(const RealLie& l) {
  for (std::size_t j = 0; j < l.dim(); ++j)
    if (!is_zero(l.ad(j).trace())) return false;
  return true;
}

RSubspace derived_algebra(const RealLie& l) {
  std::vector<RVec> gens;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) gens.push_back(l.ad(i).column(j));
  return RSubspace::span(gens, l.dim());
}

namespace {

RSubspace bracket_with_g(const RealLie& l, const RSubspace& s) {
  std::vector<RVec> gens;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    RMatrix ad = l.ad(i);
    for (const auto& v : s.basis()) gens.push_back(ad * v);
  }
  return RSubspace::span(gens, l.dim());
}

}  // namespace

bool is_nilpotent_lie(const RealLie& l) {
  RSubspace c = RSubspace::whole(l.dim());
  while (!c.is_zero()) {
    RSubspace next = bracket_with_g(l, c);
    if (next == c) return false;
    c = std::move(next);
  }
  return true;
}

bool is_two_step_nilpotent_lie(const RealLie& l) { return bracket_with_g(l, derived_algebra(l)).is_zero(); }

bool is_two_step_solvable(const RealLie& l) {
  const RSubspace derived = derived_algebra(l);
  const auto& d = derived.basis();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (!is_zero(l.bracket(d[i], d[j]))) return false;
  return true;
}

RMatrix killing(const RealLie& l) {
  const std::size_t m = l.dim();
  std::vector<RMatrix> ad;
  for (std::size_t i = 0; i < m; ++i) ad.push_back(l.ad(i));
  RMatrix k(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) k(i, j) = k(j, i) = (ad[i] * ad[j]).trace();
  return k;
}

}  // namespace pkla
