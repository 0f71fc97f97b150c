#pragma once

// Linear and sesquilinear algebra over Q(i): C-linear and semilinear
// operators, hermitian Gram matrices, canonical subspaces.

#include <cstddef>
#include <vector>

#include "pkla/matrix.hpp"

namespace pkla {

using CVec = Vec<Complex>;
using RVec = Vec<Rational>;

/// A hermitian form that must be non-degenerate is not.
class DegenerateFormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C-linear map v -> M v.
class LinearOperator {
 public:
  LinearOperator() = default;
  explicit LinearOperator(CMatrix m);

  static LinearOperator identity(std::size_t n) { return LinearOperator(CMatrix::identity(n)); }
  static LinearOperator zero(std::size_t n) { return LinearOperator(CMatrix(n, n)); }

  std::size_t dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  CVec operator()(const CVec& v) const { return m_ * v; }
  bool is_zero() const { return m_.is_zero(); }

  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(a.m_ * b.m_);
  }
  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(a.m_ + b.m_);
  }
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(a.m_ - b.m_);
  }
  friend LinearOperator operator*(const Complex& s, const LinearOperator& a) { return LinearOperator(s * a.m_); }
  friend bool operator==(const LinearOperator& a, const LinearOperator& b) { return a.m_ == b.m_; }

 private:
  CMatrix m_;
};

/// Semilinear map v -> M conj(v); tau(a v) = conj(a) tau(v).
class SemilinearOperator {
 public:
  SemilinearOperator() = default;
  explicit SemilinearOperator(CMatrix m);

  static SemilinearOperator zero(std::size_t n) { return SemilinearOperator(CMatrix(n, n)); }

  std::size_t dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  CVec operator()(const CVec& v) const { return m_ * conj(v); }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const SemilinearOperator& a, const SemilinearOperator& b) { return a.m_ == b.m_; }
  friend SemilinearOperator operator+(const SemilinearOperator& a, const SemilinearOperator& b) {
    return SemilinearOperator(a.m_ + b.m_);
  }
  friend SemilinearOperator operator-(const SemilinearOperator& a, const SemilinearOperator& b) {
    return SemilinearOperator(a.m_ - b.m_);
  }
  /// Post-multiplication by a scalar: v -> s * tau(v).
  friend SemilinearOperator operator*(const Complex& s, const SemilinearOperator& a) {
    return SemilinearOperator(s * a.m_);
  }

 private:
  CMatrix m_;
};

// Composition follows the usual parity rule.
inline SemilinearOperator operator*(const LinearOperator& a, const SemilinearOperator& b) {
  return SemilinearOperator(a.matrix() * b.matrix());
}
inline SemilinearOperator operator*(const SemilinearOperator& a, const LinearOperator& b) {
  return SemilinearOperator(a.matrix() * conj(b.matrix()));
}
inline LinearOperator operator*(const SemilinearOperator& a, const SemilinearOperator& b) {
  return LinearOperator(a.matrix() * conj(b.matrix()));
}

/// Gram matrix of a non-degenerate hermitian form, H(x, y) = x^T G conj(y).
class HermitianGram {
 public:
  HermitianGram() = default;
  /// Throws DegenerateFormError if G is singular, std::invalid_argument if not hermitian.
  explicit HermitianGram(CMatrix g);

  std::size_t dim() const { return g_.rows(); }
  const CMatrix& matrix() const { return g_; }
  const CMatrix& inverse_matrix() const { return inv_; }

  Complex operator()(const CVec& x, const CVec& y) const;
  Complex at(std::size_t j, std::size_t k) const { return g_(j, k); }

  friend bool operator==(const HermitianGram& a, const HermitianGram& b) { return a.g_ == b.g_; }

 private:
  CMatrix g_;
  CMatrix inv_;
};

/// Subspace of T^n stored as the nonzero rows of its reduced row-echelon
/// basis matrix; equal subspaces have identical bases.
template <class T>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const std::vector<Vec<T>>& vectors, std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return span({}, ambient); }
  static Subspace whole(std::size_t ambient);
  /// {x : m x = 0}.
  static Subspace null_space(const Matrix<T>& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec<T>>& basis() const { return basis_; }

  bool contains(const Vec<T>& v) const;
  bool contains(const Subspace& w) const;
  Subspace intersect(const Subspace& w) const;
  Subspace operator+(const Subspace& w) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  /// Rows of a matrix whose null space is this subspace.
  Matrix<T> equations() const;

  std::size_t ambient_ = 0;
  std::vector<Vec<T>> basis_;
};

using CSubspace = Subspace<Complex>;
using RSubspace = Subspace<Rational>;

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// The unique F* with H(F* x, y) = H(x, F y); (F*)^T G = G conj(F).
LinearOperator h_adjoint(const LinearOperator& f, const HermitianGram& g);

/// Trace of the underlying R-linear map on the 2n-dimensional real space.
Rational real_trace(const LinearOperator& f);
Rational real_trace(const SemilinearOperator& t);

/// Real 2n x 2n matrix in the basis (e_1..e_n, i e_1..i e_n).
RMatrix realify(const LinearOperator& f);
RMatrix realify(const SemilinearOperator& t);

/// Real coordinates (Re z, Im z) of a complex coordinate vector, and back.
RVec realify(const CVec& v);
CVec complexify(const RVec& v);

/// (p, q) via exact hermitian congruence with hyperbolic-pair pivoting.
Signature signature(const CMatrix& hermitian);
Signature signature(const HermitianGram& g);

/// Columns w_k with H(w_k, w_l) diagonal (real); basis change of the congruence.
CMatrix diagonalizing_basis(const CMatrix& hermitian);

CSubspace orthogonal_complement(const HermitianGram& g, const CSubspace& w);

/// Structural zero test used by property checks: is the restriction of H to w zero?
bool is_isotropic(const HermitianGram& g, const CSubspace& w);

}  // namespace pkla
