#include "pkla/curvature.hpp"

#include "pkla/realform.hpp"

namespace pkla {

bool CurvatureTensor::is_zero() const {
  for (const auto& m : r_)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

// R_{f_p} and R*_{f_p} for the real chart vector f_p.
LinearOperator r_real(const APKPair& p, std::size_t k) {
  const std::size_t n = p.dim();
  return k < n ? p.r(k) : Complex::i() * p.r(k - n);
}

LinearOperator rstar_real(const APKPair& p, std::size_t k) {
  const std::size_t n = p.dim();
  return k < n ? p.rstar(k) : -Complex::i() * p.rstar(k - n);
}

// rho_v(x) = x . v in the LSA.
RMatrix rho(const Algebra<Rational>& lsa, const RVec& v) {
  const std::size_t m = lsa.dim();
  RMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    RVec c = lsa.product(unit_vec<Rational>(m, j), v);
    for (std::size_t r = 0; r < m; ++r) out(r, j) = c[r];
  }
  return out;
}

std::vector<RMatrix> rho_of_jbasis(const LieRealization& l) {
  std::vector<RMatrix> out;
  for (std::size_t k = 0; k < l.dim(); ++k) out.push_back(rho(l.lsa, l.J.column(k)));
  return out;
}

// A matrix is the linear combination sum c_k basis[k].
RMatrix combine(const std::vector<RMatrix>& basis, const RVec& c, std::size_t m) {
  RMatrix out(m, m);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!is_zero(c[k])) out += c[k] * basis[k];
  return out;
}

template <class F>
CurvatureTensor antisymmetric(std::size_t m, F f) {
  CurvatureTensor t(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      t.at(p, q) = f(p, q);
      t.at(q, p) = -t.at(p, q);
    }
  return t;
}

std::string index_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_equal(const RMatrix& a, const RMatrix& b, const std::string& what) {
  if (a == b) return;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c))
        throw InternalError(what + " routes disagree at " + index_string(r, c) + ": " + to_string(a(r, c)) +
                            " vs " + to_string(b(r, c)));
}

void require_equal(const Connection& a, const Connection& b, const std::string& what) {
  for (std::size_t p = 0; p < a.size(); ++p) require_equal(a[p], b[p], what + " nabla_" + std::to_string(p));
}

void require_equal(const CurvatureTensor& a, const CurvatureTensor& b, const std::string& what) {
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) require_equal(a.at(p, q), b.at(p, q), what + " R" + index_string(p, q));
}

void require_ok(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) throw InternalError(what + ":\n" + r.to_string());
}

bool flat_criterion(const APKPair& p) {
  for (std::size_t j = 0; j < p.dim(); ++j)
    for (std::size_t k = 0; k < p.dim(); ++k)
      if (!(Complex(3) * (p.r(j) * p.rstar(k)) == p.rstar(k) * p.r(j))) return false;
  return true;
}

bool c3_criterion(const APKPair& p) {
  for (std::size_t j = 0; j < p.dim(); ++j)
    for (std::size_t k = 0; k < p.dim(); ++k)
      if (!(p.r(j) * p.rstar(k)).is_zero()) return false;
  return true;
}

bool lsa_associative(const Algebra<Rational>& a) {
  const std::size_t m = a.dim();
  std::vector<RMatrix> left;
  for (std::size_t i = 0; i < m; ++i) left.push_back(a.right_mult_matrix(unit_vec<Rational>(m, i)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RVec xy = a.product(unit_vec<Rational>(m, i), unit_vec<Rational>(m, j));
      // (e_i e_j) z = e_i (e_j z) for all z
      if (!(combine(left, xy, m) == left[i] * left[j])) return false;
    }
  return true;
}

FlatEquivalence equivalence(const APKPair& p, const LieRealization& l, bool flat) {
  FlatEquivalence c{flat, is_novikov(p), c3_criterion(p)};
  if (c.c2 != lsa_associative(l.lsa)) throw InternalError("Novikov test disagrees with LSA associativity");
  if ((c.c1 && c.c2 != c.c3) || (c.c2 && c.c1 != c.c3) || (c.c3 && c.c1 != c.c2))
    throw InternalError("flatness equivalences fail: c1=" + std::to_string(c.c1) + " c2=" + std::to_string(c.c2) +
                        " c3=" + std::to_string(c.c3));
  return c;
}

std::optional<Rational> proportionality(const RMatrix& g, const RMatrix& ric) {
  for (std::size_t r = 0; r < ric.rows(); ++r)
    for (std::size_t c = 0; c < ric.cols(); ++c)
      if (!is_zero(ric(r, c))) {
        Rational gamma = g(r, c) / ric(r, c);
        if (g == gamma * ric) return gamma;
        return std::nullopt;
      }
  return std::nullopt;
}

// Einstein but not Ricci-flat forces aff type with B = gamma * trace form.
void assert_einstein_structure(const APKPair& p, const Rational& gamma) {
  auto f = detect_aff(p);
  if (!f) throw InternalError("Einstein pair is not of aff type");
  const RealAlgebra& a = f->S.algebra();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RVec ab = a.product(unit_vec<Rational>(d, i), unit_vec<Rational>(d, j));
      Rational tr = a.right_mult_matrix(ab).trace();
      if (f->S.form()(i, j) != gamma * tr)
        throw InternalError("B differs from gamma times the trace form at " + index_string(i, j));
    }
}

struct Computed {
  LieRealization l;
  Connection nabla;
  CurvatureTensor riemann{0};
  RMatrix ricci;
};

Computed compute_all(const APKPair& p) {
  Computed out{realize(p), {}, CurvatureTensor(0), {}};
  out.nabla = route::nabla_apk(p);
  require_equal(out.nabla, route::nabla_lsa(out.l), "connection");
  require_ok(check_connection(out.l, out.nabla), "Levi-Civita connection");
  out.riemann = route::riemann_apk(p);
  require_equal(out.riemann, route::riemann_lsa(out.l), "curvature (APK vs LSA)");
  require_equal(out.riemann, route::riemann_commutator(out.l, out.nabla), "curvature (APK vs commutator)");
  require_ok(check_curvature(out.riemann), "curvature tensor");
  out.ricci = route::ricci_apk(p);
  require_equal(out.ricci, route::ricci_lsa(out.l), "Ricci (APK vs LSA)");
  require_equal(out.ricci, route::ricci_contraction(out.riemann), "Ricci (APK vs contraction)");
  if (!(out.ricci == out.ricci.transpose())) throw InternalError("Ricci tensor is not symmetric");
  return out;
}

}  // namespace

namespace route {

Connection nabla_apk(const APKPair& p) {
  Connection out;
  for (std::size_t k = 0; k < 2 * p.dim(); ++k) out.push_back(realify(r_real(p, k) - rstar_real(p, k)));
  return out;
}

Connection nabla_lsa(const LieRealization& l) {
  Connection out;
  for (const auto& r : rho_of_jbasis(l)) out.push_back(-(r * l.J));
  return out;
}

CurvatureTensor riemann_apk(const APKPair& p) {
  const std::size_t m = 2 * p.dim();
  return antisymmetric(m, [&](std::size_t a, std::size_t b) {
    LinearOperator ra = r_real(p, a), rb = r_real(p, b), sa = rstar_real(p, a), sb = rstar_real(p, b);
    return realify(Complex(3) * (ra * sb) - Complex(3) * (rb * sa) + sa * rb - sb * ra);
  });
}

CurvatureTensor riemann_lsa(const LieRealization& l) {
  const std::size_t m = l.dim();
  auto rj = rho_of_jbasis(l);
  return antisymmetric(m, [&](std::size_t a, std::size_t b) {
    RVec jb = l.J * l.lie.bracket(unit_vec<Rational>(m, a), unit_vec<Rational>(m, b));
    return -(rho(l.lsa, jb) * l.J) + rj[a] * rj[b] - rj[b] * rj[a];
  });
}

CurvatureTensor riemann_commutator(const LieRealization& l, const Connection& nabla) {
  const std::size_t m = l.dim();
  return antisymmetric(m, [&](std::size_t a, std::size_t b) {
    RVec br = l.lie.bracket(unit_vec<Rational>(m, a), unit_vec<Rational>(m, b));
    return combine(nabla, br, m) - (nabla[a] * nabla[b] - nabla[b] * nabla[a]);
  });
}

RMatrix ricci_apk(const APKPair& p) {
  const std::size_t m = 2 * p.dim();
  RMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out(a, b) = -2 * real_trace(r_real(p, b) * rstar_real(p, a));
  return out;
}

RMatrix ricci_lsa(const LieRealization& l) {
  const std::size_t m = l.dim();
  RMatrix k = killing(l.lie), out(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      RVec prod = l.lsa.product(l.J.column(b), l.J.column(a));
      out(a, b) = l.lie.ad(prod).trace() - k(a, b);
    }
  return out;
}

RMatrix ricci_contraction(const CurvatureTensor& r) {
  const std::size_t m = r.dim();
  RMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Rational s(0);
      for (std::size_t z = 0; z < m; ++z) s += r.at(a, z)(z, b);
      out(a, b) = s;
    }
  return out;
}

}  // namespace route

ValidationReport check_connection(const LieRealization& l, const Connection& nabla) {
  ValidationReport rep;
  const std::size_t m = l.dim();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      RVec lhs = nabla[a].column(b) - nabla[b].column(a);
      RVec rhs = l.lie.bracket(unit_vec<Rational>(m, a), unit_vec<Rational>(m, b));
      if (lhs != rhs) rep.add("torsion_free", {a, b}, to_string(lhs), to_string(rhs));
    }
    if (!(nabla[a].transpose() * l.gmat + l.gmat * nabla[a]).is_zero()) rep.add("metric", {a});
    if (!(nabla[a] * l.J == l.J * nabla[a])) rep.add("kahler", {a});
  }
  return rep;
}

ValidationReport check_curvature(const CurvatureTensor& r) {
  ValidationReport rep;
  const std::size_t m = r.dim();
  for (std::size_t a = 0; a < m; ++a) {
    if (!r.at(a, a).is_zero()) rep.add("antisymmetry", {a, a});
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!(r.at(a, b) == -r.at(b, a))) rep.add("antisymmetry", {a, b});
      // the cyclic sum is alternating, so a < b < c covers everything
      for (std::size_t c = b + 1; c < m; ++c) {
        RVec s = r.at(a, b).column(c) + r.at(b, c).column(a) + r.at(c, a).column(b);
        if (!is_zero(s)) rep.add("bianchi", {a, b, c}, to_string(s));
      }
    }
  }
  return rep;
}

Connection levi_civita(const APKPair& p) {
  Connection n = route::nabla_apk(p);
  LieRealization l = realize(p);
  require_equal(n, route::nabla_lsa(l), "connection");
  require_ok(check_connection(l, n), "Levi-Civita connection");
  return n;
}

CurvatureTensor riemann(const APKPair& p) { return compute_all(p).riemann; }

RMatrix ricci(const APKPair& p) { return compute_all(p).ricci; }

bool is_flat(const APKPair& p) {
  bool flat = flat_criterion(p);
  if (flat != route::riemann_apk(p).is_zero()) throw InternalError("flatness criterion disagrees with the curvature tensor");
  return flat;
}

FlatEquivalence flat_equiv_report(const APKPair& p) { return equivalence(p, realize(p), is_flat(p)); }

std::optional<bool> two_step_flat_criterion(const APKPair& p) {
  if (!is_two_step_pair(p)) return std::nullopt;
  bool iso = is_isotropic(p.form(), power_ideal(p.algebra(), 2));
  if (iso != is_flat(p)) throw InternalError("two-step flatness criterion disagrees with the curvature tensor");
  return iso;
}

std::optional<Rational> einstein_check(const APKPair& p) {
  RMatrix ric = ricci(p);
  auto gamma = proportionality(realize(p).gmat, ric);
  if (gamma) assert_einstein_structure(p, *gamma);
  return gamma;
}

CurvatureReport curvature_report(const APKPair& p) {
  Computed c = compute_all(p);
  CurvatureReport rep;
  rep.flat = flat_criterion(p);
  if (rep.flat != c.riemann.is_zero()) throw InternalError("flatness criterion disagrees with the curvature tensor");
  rep.ricci_flat = c.ricci.is_zero();
  if (rep.flat && !rep.ricci_flat) throw InternalError("flat metric with nonzero Ricci tensor");
  rep.einstein_factor = proportionality(c.l.gmat, c.ricci);
  if (rep.einstein_factor) assert_einstein_structure(p, *rep.einstein_factor);
  rep.c = equivalence(p, c.l, rep.flat);
  rep.novikov = rep.c.c2;
  rep.two_step = is_two_step_pair(p);
  if (rep.two_step && is_isotropic(p.form(), power_ideal(p.algebra(), 2)) != rep.flat)
    throw InternalError("two-step flatness criterion disagrees with the curvature tensor");
  rep.gmat = c.l.gmat;
  rep.nabla = std::move(c.nabla);
  rep.riemann = std::move(c.riemann);
  rep.ricci = std::move(c.ricci);
  return rep;
}

}  // namespace pkla
