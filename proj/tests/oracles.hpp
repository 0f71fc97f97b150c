#pragma once

// Independent recomputations used as test oracles. They work from raw
// structure constants and Gram matrices with plain loops and their own
// elimination, and never call the library routines they are checking.

#include <array>
#include <optional>

#include "pkla/liereal.hpp"

namespace oracle {

using namespace pkla;

template <class T>
std::optional<Vec<T>> gauss_solve(Matrix<T> a, Vec<T> b) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && is_zero(a(p, col))) ++p;
    if (p == n) continue;
    for (std::size_t c = 0; c < m; ++c) std::swap(a(p, c), a(row, c));
    std::swap(b[p], b[row]);
    T inv = T(1) / a(row, col);
    for (std::size_t c = 0; c < m; ++c) a(row, c) = a(row, c) * inv;
    b[row] = b[row] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t c = 0; c < m; ++c) a(r, c) = a(r, c) - f * a(row, c);
      b[r] = b[r] - f * b[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (!is_zero(b[r])) return std::nullopt;
  Vec<T> x(m, T(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
  return x;
}

template <class T>
Vec<T> mult(const Algebra<T>& a, const Vec<T>& x, const Vec<T>& y) {
  const std::size_t n = a.dim();
  Vec<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + x[i] * y[j] * a.c(i, j, k);
    }
  }
  return out;
}

inline Complex herm(const CMatrix& g, const CVec& x, const CVec& y) {
  Complex s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t k = 0; k < y.size(); ++k) s = s + x[j] * g(j, k) * conj(y[k]);
  return s;
}

inline CVec basis(std::size_t n, std::size_t k) {
  CVec v(n, Complex(0));
  v[k] = 1;
  return v;
}

/// R*_x y from H(R*_x y, e_k) = H(y, x e_k) for every k.
inline CVec rstar(const AssocAlgebra& u, const CMatrix& g, const CVec& x, const CVec& y) {
  const std::size_t n = u.dim();
  CMatrix sys(n, n);
  CVec rhs(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) sys(k, j) = g(j, k);
    rhs[k] = herm(g, y, mult(u, x, basis(n, k)));
  }
  return *gauss_solve(sys, rhs);
}

/// First basis triple (x, y, z) with x R*_z y != y R*_z x.
inline std::optional<std::array<std::size_t, 3>> compat_witness(const AssocAlgebra& u, const CMatrix& g) {
  const std::size_t n = u.dim();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        CVec ex = basis(n, x), ey = basis(n, y), ez = basis(n, z);
        if (mult(u, ex, rstar(u, g, ez, ey)) != mult(u, ey, rstar(u, g, ez, ex))) return std::array{x, y, z};
      }
  return std::nullopt;
}

/// Chart vector f_a: e_a for a < n, i e_{a-n} otherwise.
inline CVec chart(std::size_t n, std::size_t a) {
  CVec v(n, Complex(0));
  if (a < n)
    v[a] = 1;
  else
    v[a - n] = Complex(0, 1);
  return v;
}

inline RVec real_coords(const CVec& v) {
  const std::size_t n = v.size();
  RVec out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = v[k].re;
    out[n + k] = v[k].im;
  }
  return out;
}

/// g_U from raw (U, G): [x, y] = R*_y x - R*_x y, omega = Im H, J = i.
/// R*_x y is solved from H(R*_x y, e_k) = H(y, x e_k) with one inverse of G^T.
inline LieRealization lie_from_raw(const AssocAlgebra& u, const CMatrix& g) {
  const std::size_t n = u.dim(), m = 2 * n;
  CMatrix gt(n, n), inv(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) gt(k, j) = g(j, k);
  for (std::size_t k = 0; k < n; ++k) {
    CVec col = *gauss_solve(gt, basis(n, k));
    for (std::size_t r = 0; r < n; ++r) inv(r, k) = col[r];
  }
  auto rs = [&](const CVec& x, const CVec& y) {
    CVec rhs(n);
    for (std::size_t k = 0; k < n; ++k) rhs[k] = herm(g, y, mult(u, x, basis(n, k)));
    return CVec(inv * rhs);
  };
  std::vector<Rational> c(m * m * m, Rational(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      RVec v = real_coords(rs(chart(n, b), chart(n, a)) - rs(chart(n, a), chart(n, b)));
      for (std::size_t k = 0; k < m; ++k) {
        c[(a * m + b) * m + k] = v[k];
        c[(b * m + a) * m + k] = -v[k];
      }
    }
  RMatrix omega(m, m), J(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) omega(a, b) = herm(g, chart(n, a), chart(n, b)).im;
    RVec jf = real_coords(Complex(0, 1) * chart(n, a));
    for (std::size_t k = 0; k < m; ++k) J(k, a) = jf[k];
  }
  return make_realization(RealLie(RealAlgebra(m, c)), J, omega);
}

inline RVec bracket(const RealLie& l, std::size_t a, std::size_t b) {
  RVec v(l.dim());
  for (std::size_t k = 0; k < l.dim(); ++k) v[k] = l.c(a, b, k);
  return v;
}

inline Rational dot(const RMatrix& g, const RVec& x, const RVec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

/// Levi-Civita connection of a left-invariant metric via the Koszul formula.
inline std::vector<RMatrix> koszul(const RealLie& l, const RMatrix& g) {
  const std::size_t m = l.dim();
  auto e = [m](std::size_t k) { return unit_vec<Rational>(m, k); };
  std::vector<RMatrix> nabla(m, RMatrix(m, m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      RVec k(m);
      for (std::size_t c = 0; c < m; ++c)
        k[c] = Rational(1, 2) * (dot(g, bracket(l, a, b), e(c)) - dot(g, bracket(l, b, c), e(a)) +
                                 dot(g, bracket(l, c, a), e(b)));
      RVec v = *gauss_solve(g, k);
      for (std::size_t r = 0; r < m; ++r) nabla[a](r, b) = v[r];
    }
  return nabla;
}

/// R(f_a, f_b) = nabla_[a,b] - [nabla_a, nabla_b], indexed a * m + b.
inline std::vector<RMatrix> curvature(const RealLie& l, const std::vector<RMatrix>& nabla) {
  const std::size_t m = l.dim();
  std::vector<RMatrix> r(m * m, RMatrix(m, m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      RMatrix x = -(nabla[a] * nabla[b] - nabla[b] * nabla[a]);
      for (std::size_t c = 0; c < m; ++c)
        if (!is_zero(l.c(a, b, c))) x = x + l.c(a, b, c) * nabla[c];
      r[a * m + b] = x;
    }
  return r;
}

/// Ric(x, y) = trace(z -> R(x, z) y).
inline RMatrix ricci(const std::vector<RMatrix>& r, std::size_t m) {
  RMatrix ric(m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Rational s = 0;
      for (std::size_t z = 0; z < m; ++z) s += r[x * m + z](z, y);
      ric(x, y) = s;
    }
  return ric;
}

template <class T>
bool associative_commutative(const Algebra<T>& a) {
  const std::size_t n = a.dim();
  auto e = [n](std::size_t k) { return unit_vec<T>(n, k); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mult(a, e(i), e(j)) != mult(a, e(j), e(i))) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (mult(a, mult(a, e(i), e(j)), e(k)) != mult(a, e(i), mult(a, e(j), e(k)))) return false;
    }
  return true;
}

/// B(ab, c) = B(a, bc) on all basis triples.
inline bool invariant_form(const RealAlgebra& a, const RMatrix& b) {
  const std::size_t n = a.dim();
  auto e = [n](std::size_t k) { return unit_vec<Rational>(n, k); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dot(b, mult(a, e(i), e(j)), e(k)) != dot(b, e(i), mult(a, e(j), e(k)))) return false;
  return true;
}

/// The 2n x 2n real matrix of v -> M v in the chart (Re, Im).
inline RMatrix realification(const CMatrix& mat) {
  const std::size_t n = mat.rows();
  RMatrix out(2 * n, 2 * n);
  for (std::size_t a = 0; a < 2 * n; ++a) {
    RVec col = real_coords(mat * chart(n, a));
    for (std::size_t r = 0; r < 2 * n; ++r) out(r, a) = col[r];
  }
  return out;
}

/// Same for a semilinear v -> M conj(v).
inline RMatrix realification_semilinear(const CMatrix& mat) {
  const std::size_t n = mat.rows();
  RMatrix out(2 * n, 2 * n);
  for (std::size_t a = 0; a < 2 * n; ++a) {
    RVec col = real_coords(mat * conj(chart(n, a)));
    for (std::size_t r = 0; r < 2 * n; ++r) out(r, a) = col[r];
  }
  return out;
}

}  // namespace oracle
