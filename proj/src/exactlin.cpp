#include "pkla/exactlin.hpp"

namespace pkla {

LinearOperator::LinearOperator(CMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw DimensionError("linear operator matrix must be square");
}

SemilinearOperator::SemilinearOperator(CMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw DimensionError("semilinear operator matrix must be square");
}

HermitianGram::HermitianGram(CMatrix g) : g_(std::move(g)) {
  if (!g_.square()) throw DimensionError("Gram matrix must be square");
  for (std::size_t r = 0; r < g_.rows(); ++r)
    for (std::size_t c = r; c < g_.cols(); ++c)
      if (!(g_(r, c) == conj(g_(c, r))))
        throw std::invalid_argument("Gram matrix is not hermitian at (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
  try {
    inv_ = inverse(g_);
  } catch (const SingularError&) {
    throw DegenerateFormError("hermitian form is degenerate");
  }
}

Complex HermitianGram::operator()(const CVec& x, const CVec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("vector size does not match form");
  CVec gy = g_ * conj(y);
  Complex s(0);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) s += x[k] * gy[k];
  return s;
}

// ---------------------------------------------------------------- Subspace

template <class T>
Subspace<T> Subspace<T>::span(const std::vector<Vec<T>>& vectors, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  auto e = rref(Matrix<T>::from_rows(vectors, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.form.row(r));
  return s;
}

template <class T>
Subspace<T> Subspace<T>::whole(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t k = 0; k < ambient; ++k) s.basis_.push_back(unit_vec<T>(ambient, k));
  return s;
}

template <class T>
Subspace<T> Subspace<T>::null_space(const Matrix<T>& m) {
  return span(kernel(m), m.cols());
}

template <class T>
bool Subspace<T>::contains(const Vec<T>& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  if (pkla::is_zero(v)) return true;
  // Reduce v against the echelon basis; pivots are the leading entries.
  Vec<T> r = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (pkla::is_zero(b[p])) ++p;
    if (pkla::is_zero(r[p])) continue;
    T f = r[p];
    for (std::size_t k = p; k < ambient_; ++k)
      if (!pkla::is_zero(b[k])) r[k] -= f * b[k];
  }
  return pkla::is_zero(r);
}

template <class T>
bool Subspace<T>::contains(const Subspace& w) const {
  for (const auto& v : w.basis_)
    if (!contains(v)) return false;
  return true;
}

template <class T>
Matrix<T> Subspace<T>::equations() const {
  if (basis_.empty()) return Matrix<T>::identity(ambient_);
  auto eq = kernel(Matrix<T>::from_rows(basis_, ambient_));
  if (eq.empty()) return Matrix<T>(0, ambient_);
  return Matrix<T>::from_rows(eq, ambient_);
}

template <class T>
Subspace<T> Subspace<T>::intersect(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw DimensionError("subspaces of different spaces");
  Matrix<T> a = equations(), b = w.equations();
  Matrix<T> stacked(a.rows() + b.rows(), ambient_);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) stacked(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) stacked(a.rows() + r, c) = b(r, c);
  if (stacked.rows() == 0) return whole(ambient_);
  return null_space(stacked);
}

template <class T>
Subspace<T> Subspace<T>::operator+(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw DimensionError("subspaces of different spaces");
  auto all = basis_;
  all.insert(all.end(), w.basis_.begin(), w.basis_.end());
  return span(all, ambient_);
}

template class Subspace<Rational>;
template class Subspace<Complex>;

// --------------------------------------------------------------- operators

LinearOperator h_adjoint(const LinearOperator& f, const HermitianGram& g) {
  if (f.dim() != g.dim()) throw DimensionError("operator and form dimensions differ");
  // (F*)^T = G conj(F) G^{-1}
  return LinearOperator((g.matrix() * conj(f.matrix()) * g.inverse_matrix()).transpose());
}

Rational real_trace(const LinearOperator& f) { return 2 * f.matrix().trace().re; }

Rational real_trace(const SemilinearOperator&) { return Rational(0); }

namespace {

// M = A + iB. Linear: [[A, -B], [B, A]]. Semilinear (input conjugated first):
// [[A, B], [B, -A]].
RMatrix realify_matrix(const CMatrix& m, bool semilinear) {
  const std::size_t n = m.rows();
  RMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& a = m(r, c).re;
      const Rational& b = m(r, c).im;
      if (!semilinear) {
        out(r, c) = a;
        out(r, n + c) = -b;
        out(n + r, c) = b;
        out(n + r, n + c) = a;
      } else {
        out(r, c) = a;
        out(r, n + c) = b;
        out(n + r, c) = b;
        out(n + r, n + c) = -a;
      }
    }
  return out;
}

}  // namespace

RMatrix realify(const LinearOperator& f) { return realify_matrix(f.matrix(), false); }
RMatrix realify(const SemilinearOperator& t) { return realify_matrix(t.matrix(), true); }

RVec realify(const CVec& v) {
  RVec out(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].re;
    out[v.size() + k] = v[k].im;
  }
  return out;
}

CVec complexify(const RVec& v) {
  if (v.size() % 2) throw DimensionError("real coordinate vector of odd length");
  const std::size_t n = v.size() / 2;
  CVec out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = Complex(v[k], v[n + k]);
  return out;
}

// --------------------------------------------------------------- signature

namespace {

// Congruence step on both the working matrix (a -> P^T a conj(P)) and the
// accumulated basis; column `dst` becomes column dst + s * column src.
void add_column(CMatrix& a, CMatrix& basis, std::size_t dst, std::size_t src, const Complex s) {
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) basis(r, dst) += s * basis(r, src);
  // rows: row_dst += s * row_src ; cols: col_dst += conj(s) * col_src
  for (std::size_t c = 0; c < n; ++c) a(dst, c) += s * a(src, c);
  Complex cs = conj(s);
  for (std::size_t r = 0; r < n; ++r) a(r, dst) += cs * a(r, src);
}

void swap_index(CMatrix& a, CMatrix& basis, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) std::swap(basis(r, i), basis(r, j));
  for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

CMatrix diagonalizing_basis(const CMatrix& hermitian) {
  if (!hermitian.square()) throw DimensionError("Gram matrix must be square");
  const std::size_t n = hermitian.rows();
  CMatrix a = hermitian;
  CMatrix basis = CMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // No anisotropic diagonal entry left: use a hyperbolic pair (k, j).
      std::size_t j = k + 1;
      bool found = false;
      for (std::size_t r = k; r < n && !found; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (!a(r, c).is_zero()) {
            swap_index(a, basis, k, r);
            j = c;
            found = true;
            break;
          }
      if (!found) break;  // remaining block is zero: degenerate
      // H(e_k + s e_j, e_k + s e_j) = 2 Re(s a_jk) = 2 |a_kj|^2 for s = a_kj.
      add_column(a, basis, k, j, a(k, j));
      p = k;
    }
    swap_index(a, basis, k, p);
    Complex inv = inverse(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      add_column(a, basis, r, k, -(a(r, k) * inv));
    }
  }
  return basis;
}

Signature signature(const CMatrix& hermitian) {
  CMatrix basis = diagonalizing_basis(hermitian);
  CMatrix d = basis.transpose() * hermitian * conj(basis);
  Signature s;
  for (std::size_t k = 0; k < d.rows(); ++k) {
    int sg = sgn(d(k, k).re);
    if (sg > 0) ++s.positive;
    if (sg < 0) ++s.negative;
  }
  if (s.positive + s.negative != d.rows()) throw DegenerateFormError("signature of a degenerate form");
  return s;
}

Signature signature(const HermitianGram& g) { return signature(g.matrix()); }

CSubspace orthogonal_complement(const HermitianGram& g, const CSubspace& w) {
  if (w.ambient() != g.dim()) throw DimensionError("subspace does not match form");
  if (w.is_zero()) return CSubspace::whole(g.dim());
  // H(x, y) = x^T (G conj(y)); one equation per basis vector y of w.
  std::vector<CVec> rows;
  for (const auto& y : w.basis()) rows.push_back(g.matrix() * conj(y));
  return CSubspace::null_space(CMatrix::from_rows(rows, g.dim()));
}

bool is_isotropic(const HermitianGram& g, const CSubspace& w) {
  for (const auto& x : w.basis())
    for (const auto& y : w.basis())
      if (!g(x, y).is_zero()) return false;
  return true;
}

}  // namespace pkla
