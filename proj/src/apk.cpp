#include "pkla/apk.hpp"

namespace pkla {

ValidationReport check_apk(const AssocAlgebra& u, const HermitianGram& h) {
  ValidationReport rep;
  const std::size_t n = u.dim();
  if (h.dim() != n) {
    rep.add("dimension", {n, h.dim()});
    return rep;
  }
  std::vector<LinearOperator> rstar;
  for (std::size_t k = 0; k < n; ++k) rstar.push_back(h_adjoint(LinearOperator(u.basis_right_mult(k)), h));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        CVec lhs = u.product(unit_vec<Complex>(n, i), rstar[k].matrix().column(j));
        CVec rhs = u.product(unit_vec<Complex>(n, j), rstar[k].matrix().column(i));
        if (lhs != rhs) rep.add("compatibility", {i, j, k}, to_string(lhs), to_string(rhs));
      }
  return rep;
}

APKPair::APKPair(AssocAlgebra u, HermitianGram h) : u_(std::move(u)), h_(std::move(h)) {
  ValidationReport rep;
  rep.merge(validate_assoc(u_));
  if (rep.ok()) rep.merge(check_apk(u_, h_));
  if (!rep.ok()) throw PreconditionError("not an APK-compatible pair", rep);
  for (std::size_t j = 0; j < dim(); ++j) {
    r_.emplace_back(u_.basis_right_mult(j));
    rstar_.push_back(h_adjoint(r_.back(), h_));
  }
}

LinearOperator APKPair::r(const CVec& x) const {
  if (x.size() != dim()) throw DimensionError("vector size differs from pair dimension");
  CMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!is_zero(x[j])) m += x[j] * r_[j].matrix();
  return LinearOperator(m);
}

LinearOperator APKPair::rstar(const CVec& x) const {
  if (x.size() != dim()) throw DimensionError("vector size differs from pair dimension");
  CMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!is_zero(x[j])) m += conj(x[j]) * rstar_[j].matrix();
  return LinearOperator(m);
}

LinearOperator star_mult(const APKPair& p, const CVec& x) { return p.rstar(x); }

CSubspace rstar_span(const APKPair& p) {
  const std::size_t n = p.dim();
  std::vector<CVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens.push_back(p.rstar(i).matrix().column(j));
  CSubspace s = CSubspace::span(gens, n);
  if (!(s == orthogonal_complement(p.form(), annihilator(p.algebra()))))
    throw InternalError("span of R*_U U differs from the orthogonal complement of the annihilator");
  return s;
}

bool is_two_step_pair(const APKPair& p) {
  if (!power_ideal(p.algebra(), 3).is_zero()) return false;
  CSubspace ann = annihilator(p.algebra());
  return ann.contains(orthogonal_complement(p.form(), ann));
}

bool is_novikov(const APKPair& p) {
  for (std::size_t j = 0; j < p.dim(); ++j)
    for (std::size_t k = 0; k < p.dim(); ++k)
      if (!(p.r(j) * p.rstar(k) == p.rstar(k) * p.r(j))) return false;
  return true;
}

APKPair direct_sum(const APKPair& a, const APKPair& b) {
  return {direct_sum(a.algebra(), b.algebra()),
          HermitianGram(block_diag(a.form().matrix(), b.form().matrix()))};
}

CMatrix transform_gram(const CMatrix& g, const CMatrix& q) { return q.transpose() * g * conj(q); }

APKPair transform_pair(const APKPair& p, const CMatrix& q) {
  return {change_basis(p.algebra(), q), HermitianGram(transform_gram(p.form().matrix(), q))};
}

}  // namespace pkla
