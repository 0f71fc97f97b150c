#pragma once

// Algebras given by structure constants e_i e_j = sum_k c(i,j,k) e_k over Q
// or Q(i). The table itself enforces nothing; validate_assoc checks the
// commutative associative case. Lie brackets reuse the same storage.

#include <optional>
#include <string>
#include <vector>

#include "pkla/exactlin.hpp"
#include "pkla/report.hpp"

namespace pkla {

template <class T>
class Algebra {
 public:
  Algebra() = default;
  /// `constants` has dim^3 entries indexed (i*dim + j)*dim + k.
  Algebra(std::size_t dim, std::vector<T> constants, std::vector<std::string> labels = {});

  static Algebra zero(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const T& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<T>& constants() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec<T> product(const Vec<T>& x, const Vec<T>& y) const;
  /// Matrix of y -> x y.
  Matrix<T> right_mult_matrix(const Vec<T>& x) const;
  Matrix<T> basis_right_mult(std::size_t j) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::size_t dim_ = 0;
  std::vector<T> c_;
  std::vector<std::string> labels_;
};

using AssocAlgebra = Algebra<Complex>;
using RealAlgebra = Algebra<Rational>;

/// Mutable staging area for structure constants; `set` writes both (i,j) and (j,i).
template <class T>
class ProductTable {
 public:
  explicit ProductTable(std::size_t dim) : dim_(dim), c_(dim * dim * dim, T(0)) {}
  void set(std::size_t i, std::size_t j, const Vec<T>& value);
  /// Writes only (i, j); used by tests that need a non-commutative table.
  void set_one_sided(std::size_t i, std::size_t j, const Vec<T>& value);
  Algebra<T> build(std::vector<std::string> labels = {}) const { return {dim_, c_, std::move(labels)}; }

 private:
  std::size_t dim_;
  std::vector<T> c_;
};

template <class T>
ValidationReport validate_assoc(const Algebra<T>& a);

LinearOperator right_mult(const AssocAlgebra& a, const CVec& x);

template <class T>
Subspace<T> annihilator(const Algebra<T>& a);

/// Span of all k-fold products (k >= 2).
template <class T>
Subspace<T> power_ideal(const Algebra<T>& a, std::size_t k);

struct Nilpotency {
  bool nilpotent = false;
  std::optional<std::size_t> index;  // least n with U^n = 0
};

template <class T>
Nilpotency is_nilpotent(const Algebra<T>& a);

/// Structure constants in the basis given by the columns of q (invertible).
template <class T>
Algebra<T> change_basis(const Algebra<T>& a, const Matrix<T>& q);

template <class T>
Algebra<T> direct_sum(const Algebra<T>& a, const Algebra<T>& b);

/// Products of basis vectors of an ideal-like subspace, read back in that basis.
/// Throws PreconditionError if some product leaves the span.
template <class T>
Algebra<T> restrict_to(const Algebra<T>& a, const std::vector<Vec<T>>& basis);

/// The complexification of a real algebra: same constants over Q(i).
AssocAlgebra complexify(const RealAlgebra& a);

}  // namespace pkla
