#pragma once

// APK-compatible pairs (U, H): a commutative associative algebra with a
// non-degenerate hermitian form such that x R*_z(y) = y R*_z(x).

#include "pkla/assoc.hpp"

namespace pkla {

/// Compatibility report for arbitrary (U, H); assumes U and H are individually valid.
ValidationReport check_apk(const AssocAlgebra& u, const HermitianGram& h);

class APKPair {
 public:
  APKPair() = default;
  /// Validates U, H and compatibility; throws PreconditionError carrying the report.
  APKPair(AssocAlgebra u, HermitianGram h);

  static APKPair empty() { return {AssocAlgebra::zero(0), HermitianGram(CMatrix(0, 0))}; }

  std::size_t dim() const { return u_.dim(); }
  const AssocAlgebra& algebra() const { return u_; }
  const HermitianGram& form() const { return h_; }

  /// R_{e_j} and R*_{e_j}.
  const LinearOperator& r(std::size_t j) const { return r_.at(j); }
  const LinearOperator& rstar(std::size_t j) const { return rstar_.at(j); }

  LinearOperator r(const CVec& x) const;
  /// R*_x; conjugate-linear in x.
  LinearOperator rstar(const CVec& x) const;

  CVec product(const CVec& x, const CVec& y) const { return u_.product(x, y); }

  friend bool operator==(const APKPair& a, const APKPair& b) { return a.u_ == b.u_ && a.h_ == b.h_; }

 private:
  AssocAlgebra u_;
  HermitianGram h_;
  std::vector<LinearOperator> r_;
  std::vector<LinearOperator> rstar_;
};

LinearOperator star_mult(const APKPair& p, const CVec& x);

/// span{R*_{e_i} e_j}; checked against ann(U)^perp (throws InternalError on mismatch).
CSubspace rstar_span(const APKPair& p);

/// U^3 = 0 and ann(U)^perp inside ann(U).
bool is_two_step_pair(const APKPair& p);

/// R_{e_j} R*_{e_k} = R*_{e_k} R_{e_j} for all j, k.
bool is_novikov(const APKPair& p);

APKPair direct_sum(const APKPair& a, const APKPair& b);

/// The same pair written in the basis given by the columns of q.
APKPair transform_pair(const APKPair& p, const CMatrix& q);

/// Q^T G conj(Q).
CMatrix transform_gram(const CMatrix& g, const CMatrix& q);

}  // namespace pkla
