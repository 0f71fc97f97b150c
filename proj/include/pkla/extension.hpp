#pragma once

// Double extensions of APK pairs by a one-dimensional algebra and the
// reverse reduction. An extension of (U, H) lives on C v0 + U + C u0, in that
// basis order, with H(u0, v0) = 1.

#include <optional>
#include <string>

#include "pkla/apk.hpp"
#include "pkla/poly.hpp"

namespace pkla {

/// A common eigenvector exists over C but its eigenvalue is not in Q(i).
class EigenvalueOutsideField : public std::runtime_error {
 public:
  explicit EigenvalueOutsideField(const std::string& polynomial)
      : std::runtime_error("eigenvalue outside Q(i); characteristic polynomial " + polynomial),
        polynomial_(polynomial) {}
  const std::string& polynomial() const { return polynomial_; }

 private:
  std::string polynomial_;
};

struct DoubleExtensionData {
  LinearOperator D;
  SemilinearOperator tau;
  CVec a0;
  CVec b0;
  Complex eps;
  Complex alpha0;

  static DoubleExtensionData trivial(std::size_t n, Complex eps = 0, Complex alpha0 = 0);
  friend bool operator==(const DoubleExtensionData&, const DoubleExtensionData&) = default;
};

/// All hypotheses on (D, tau, a0, b0, eps) against the pair.
ValidationReport validate_extension_data(const APKPair& p, const DoubleExtensionData& d);

APKPair double_extend(const APKPair& p, const DoubleExtensionData& d);

/// U + C u0 with (x + a u0)(y + b u0) = xy + phi(x, y) u0, phi(x,y) = x^T F y.
AssocAlgebra central_extension(const AssocAlgebra& u, const CMatrix& phi);

/// C v + U with v v = eps v + x0 and v x = delta(x).
AssocAlgebra semidirect(const AssocAlgebra& u, const LinearOperator& delta, const CVec& x0, const Complex& eps);

struct ReductionCertificate {
  CVec u0;
  CVec lambda;  // lambda(e_j); lambda(x) = sum conj(x_j) lambda_j
  CVec v0;
  CMatrix basis_change;  // columns v0, basis of U1, u0
};

/// Checks u0, lambda and v0 against the pair.
ValidationReport validate_certificate(const APKPair& p, const ReductionCertificate& c);

/// None iff ann(U) meets its orthogonal complement trivially.
std::optional<ReductionCertificate> find_reduction_vector(const APKPair& p);

/// Certificate for a given u0 in ann(U) and ann(U)^perp that is a common eigenvector.
ReductionCertificate certificate_for(const APKPair& p, const CVec& u0);

struct Reduction {
  APKPair reduced;
  DoubleExtensionData data;
  ReductionCertificate cert;
};

Reduction reduce(const APKPair& p);
Reduction reduce_at(const APKPair& p, const CVec& u0);

struct Tower {
  APKPair base;
  std::vector<Reduction> steps;       // steps[0] reduces the input
  std::optional<std::string> diagnostic;  // set when an eigenvalue left Q(i)
};

/// Reduces until ann(U) meets ann(U)^perp trivially, then replays the extensions.
Tower tower(const APKPair& p);

/// Rebuilds the top pair from the base and the recorded steps.
APKPair replay(const Tower& t);

}  // namespace pkla
