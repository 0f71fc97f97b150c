#include "pkla/assoc.hpp"

namespace pkla {

template <class T>
Algebra<T>::Algebra(std::size_t dim, std::vector<T> constants, std::vector<std::string> labels)
    : dim_(dim), c_(std::move(constants)), labels_(std::move(labels)) {
  if (c_.size() != dim_ * dim_ * dim_) throw DimensionError("structure constant table has wrong size");
  if (labels_.empty())
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k));
  if (labels_.size() != dim_) throw DimensionError("basis label count differs from dimension");
}

template <class T>
Algebra<T> Algebra<T>::zero(std::size_t dim, std::vector<std::string> labels) {
  return Algebra(dim, std::vector<T>(dim * dim * dim, T(0)), std::move(labels));
}

template <class T>
Vec<T> Algebra<T>::product(const Vec<T>& x, const Vec<T>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("vector size differs from algebra dimension");
  Vec<T> out(dim_, T(0));
  T xy;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(c(i, j, k))) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

template <class T>
Matrix<T> Algebra<T>::right_mult_matrix(const Vec<T>& x) const {
  if (x.size() != dim_) throw DimensionError("vector size differs from algebra dimension");
  // R_x(y) = x y: column j is x e_j.
  Matrix<T> m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(c(i, j, k))) m(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

template <class T>
Matrix<T> Algebra<T>::basis_right_mult(std::size_t j) const {
  return right_mult_matrix(unit_vec<T>(dim_, j));
}

template <class T>
void ProductTable<T>::set(std::size_t i, std::size_t j, const Vec<T>& value) {
  set_one_sided(i, j, value);
  set_one_sided(j, i, value);
}

template <class T>
void ProductTable<T>::set_one_sided(std::size_t i, std::size_t j, const Vec<T>& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) throw DimensionError("product entry out of range");
  for (std::size_t k = 0; k < dim_; ++k) c_[(i * dim_ + j) * dim_ + k] = value[k];
}

template <class T>
ValidationReport validate_assoc(const Algebra<T>& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(a.c(i, j, k) == a.c(j, i, k)))
          rep.add("commutativity", {i, j, k}, to_string(a.c(i, j, k)), to_string(a.c(j, i, k)));
  std::vector<Vec<T>> basis;
  for (std::size_t k = 0; k < n; ++k) basis.push_back(unit_vec<T>(n, k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<T> ij = a.product(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k) {
        Vec<T> lhs = a.product(ij, basis[k]);
        Vec<T> rhs = a.product(basis[i], a.product(basis[j], basis[k]));
        if (lhs != rhs) rep.add("associativity", {i, j, k}, to_string(lhs), to_string(rhs));
      }
    }
  return rep;
}

LinearOperator right_mult(const AssocAlgebra& a, const CVec& x) { return LinearOperator(a.right_mult_matrix(x)); }

template <class T>
Subspace<T> annihilator(const Algebra<T>& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Subspace<T>::zero(0);
  // x in ann iff R_{e_j} x = 0 for all j: stack the R_{e_j}.
  Matrix<T> stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> r = a.basis_right_mult(j);
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) stacked(j * n + row, col) = r(row, col);
  }
  return Subspace<T>::null_space(stacked);
}

template <class T>
Subspace<T> power_ideal(const Algebra<T>& a, std::size_t k) {
  if (k < 2) throw std::invalid_argument("power_ideal needs k >= 2");
  const std::size_t n = a.dim();
  Subspace<T> current = Subspace<T>::whole(n);
  for (std::size_t step = 2; step <= k; ++step) {
    std::vector<Vec<T>> gens;
    for (const auto& p : current.basis())
      for (std::size_t j = 0; j < n; ++j) gens.push_back(a.product(p, unit_vec<T>(n, j)));
    Subspace<T> next = Subspace<T>::span(gens, n);
    if (next == current) return next;  // stabilized
    current = std::move(next);
    if (current.is_zero()) return current;
  }
  return current;
}

template <class T>
Nilpotency is_nilpotent(const Algebra<T>& a) {
  for (std::size_t k = 2; k <= a.dim() + 1; ++k) {
    Subspace<T> p = power_ideal(a, k);
    if (p.is_zero()) return {true, k};
    if (p == power_ideal(a, k + 1)) return {false, std::nullopt};
  }
  if (a.dim() == 0) return {true, 2};
  return {false, std::nullopt};
}

template <class T>
Algebra<T> change_basis(const Algebra<T>& a, const Matrix<T>& q) {
  const std::size_t n = a.dim();
  if (q.rows() != n || q.cols() != n) throw DimensionError("basis change has wrong shape");
  Matrix<T> qinv = inverse(q);
  std::vector<Vec<T>> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(q.column(k));
  ProductTable<T> table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.set_one_sided(i, j, qinv * a.product(cols[i], cols[j]));
  return table.build();
}

template <class T>
Algebra<T> direct_sum(const Algebra<T>& a, const Algebra<T>& b) {
  const std::size_t n = a.dim() + b.dim();
  ProductTable<T> table(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec<T> v(n, T(0));
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.c(i, j, k);
      table.set_one_sided(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec<T> v(n, T(0));
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.c(i, j, k);
      table.set_one_sided(a.dim() + i, a.dim() + j, v);
    }
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return table.build(labels);
}

template <class T>
Algebra<T> restrict_to(const Algebra<T>& a, const std::vector<Vec<T>>& basis) {
  const std::size_t m = basis.size();
  ProductTable<T> table(m);
  if (m == 0) return table.build();
  Matrix<T> cols = Matrix<T>::from_columns(basis, a.dim());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto coords = solve(cols, a.product(basis[i], basis[j]));
      if (!coords) throw PreconditionError("subspace is not closed under multiplication");
      table.set_one_sided(i, j, *coords);
    }
  return table.build();
}

AssocAlgebra complexify(const RealAlgebra& a) {
  std::vector<Complex> c;
  c.reserve(a.constants().size());
  for (const auto& x : a.constants()) c.emplace_back(x);
  return {a.dim(), std::move(c), a.labels()};
}

#define PKLA_INSTANTIATE(T)                                                                 \
  template class Algebra<T>;                                                            \
  template class ProductTable<T>;                                                           \
  template ValidationReport validate_assoc(const Algebra<T>&);                          \
  template Subspace<T> annihilator(const Algebra<T>&);                                  \
  template Subspace<T> power_ideal(const Algebra<T>&, std::size_t);                     \
  template Nilpotency is_nilpotent(const Algebra<T>&);                                  \
  template Algebra<T> change_basis(const Algebra<T>&, const Matrix<T>&);            \
  template Algebra<T> direct_sum(const Algebra<T>&, const Algebra<T>&);         \
  template Algebra<T> restrict_to(const Algebra<T>&, const std::vector<Vec<T>>&);

PKLA_INSTANTIATE(Rational)
PKLA_INSTANTIATE(Complex)

#undef PKLA_INSTANTIATE

}  // namespace pkla
