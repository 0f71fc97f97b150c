#pragma once

// Levi-Civita connection, curvature and Ricci tensors of the metric on g_U,
// all expressed in the canonical real chart (e_1..e_n, i e_1..i e_n).
// Conventions: R(x, y) = nabla_[x,y] - [nabla_x, nabla_y] and
// Ric(x, y) = trace(z -> R(x, z) y).

#include <optional>

#include "pkla/liereal.hpp"

namespace pkla {

/// nabla[p] is the matrix of y -> nabla_{f_p} y.
using Connection = std::vector<RMatrix>;

/// riemann.at(p, q) is the matrix of R(f_p, f_q).
class CurvatureTensor {
 public:
  explicit CurvatureTensor(std::size_t m) : m_(m), r_(m * m, RMatrix(m, m)) {}
  std::size_t dim() const { return m_; }
  const RMatrix& at(std::size_t p, std::size_t q) const { return r_[p * m_ + q]; }
  RMatrix& at(std::size_t p, std::size_t q) { return r_[p * m_ + q]; }
  bool is_zero() const;
  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;

 private:
  std::size_t m_;
  std::vector<RMatrix> r_;
};

struct FlatEquivalence {
  bool c1;  // flat
  bool c2;  // LSA associative
  bool c3;  // R_x R*_y = 0 for all x, y
};

struct CurvatureReport {
  Connection nabla;
  CurvatureTensor riemann{0};
  RMatrix ricci;
  RMatrix gmat;
  bool flat = false;
  bool ricci_flat = false;
  std::optional<Rational> einstein_factor;
  bool novikov = false;
  bool two_step = false;
  FlatEquivalence c{};
};

// Individual routes, exposed so callers can compare them.
namespace route {
Connection nabla_apk(const APKPair& p);
Connection nabla_lsa(const LieRealization& l);
CurvatureTensor riemann_apk(const APKPair& p);
CurvatureTensor riemann_lsa(const LieRealization& l);
CurvatureTensor riemann_commutator(const LieRealization& l, const Connection& nabla);
RMatrix ricci_apk(const APKPair& p);
RMatrix ricci_lsa(const LieRealization& l);
RMatrix ricci_contraction(const CurvatureTensor& r);
}  // namespace route

/// Torsion-free, metric and J-parallel.
ValidationReport check_connection(const LieRealization& l, const Connection& nabla);
/// First Bianchi identity and antisymmetry.
ValidationReport check_curvature(const CurvatureTensor& r);

// These evaluate every route, throw InternalError on any disagreement and
// return the common value.
Connection levi_civita(const APKPair& p);
CurvatureTensor riemann(const APKPair& p);
RMatrix ricci(const APKPair& p);

/// 3 R_x R*_y = R*_y R_x on basis pairs; asserted against riemann == 0.
bool is_flat(const APKPair& p);
FlatEquivalence flat_equiv_report(const APKPair& p);
/// Isotropy of U^2 for 2-step pairs; none when the pair is not 2-step.
std::optional<bool> two_step_flat_criterion(const APKPair& p);
/// gamma with g = gamma Ric, none if Ric = 0 or not proportional.
std::optional<Rational> einstein_check(const APKPair& p);

CurvatureReport curvature_report(const APKPair& p);

}  // namespace pkla
