#pragma once

// Recognizing pairs that come from a real symmetric algebra (A, B): the
// involution sigma with sigma(R*_x y) = R*_y x, its real form, and the
// splitting U = ann(U) + ann(U)^perp.

#include <optional>

#include "pkla/liereal.hpp"

namespace pkla {

struct RealFormCertificate {
  SemilinearOperator sigma;
  CMatrix real_basis;  // columns: a basis of the real form, also a C-basis of U
  RealSymmetricAlgebra S;
  RMatrix iso;  // standard_pk(S) -> build_lie(P)
};

/// The sigma invariants: involution, multiplicative, H(sx,sy) = conj H(x,y), H(xy,z) = H(x, s(y) z).
ValidationReport validate_sigma(const APKPair& p, const SemilinearOperator& sigma);

/// Requires ann(U) = 0 (PreconditionError otherwise).
RealFormCertificate sigma_from_adjoints(const APKPair& p);

struct AnnSplit {
  APKPair ann_part;
  APKPair perp_part;
  CMatrix basis_change;  // columns: basis of ann(U), then of ann(U)^perp
};

/// None when ann(U) meets ann(U)^perp.
std::optional<AnnSplit> split_ann(const APKPair& p);

struct AffForm {
  RealSymmetricAlgebra S;
  CMatrix real_basis;  // columns v_k; (a, b) -> -(a + ib)/2 in these coordinates
  RMatrix iso;         // standard_pk(S) -> build_lie(P)
};

/// None when the pair is not of aff type (ann meets its complement).
std::optional<AffForm> detect_aff(const APKPair& p);

/// Real form spanned by the columns of v (must be a C-basis of U on which
/// products and -H/4 are real); throws PreconditionError otherwise.
AffForm real_form_from_basis(const APKPair& p, const CMatrix& v);

/// Checks A = ann(A) + e_1 A + ... + e_p A as described by the idempotents.
ValidationReport verify_unital_decomposition(const RealSymmetricAlgebra& s, const std::vector<RVec>& idempotents);

/// Primitive idempotents of ann(A)^perp when every multiplication operator
/// splits over Q; none otherwise. Not a general idempotent search.
std::optional<std::vector<RVec>> split_units(const RealSymmetricAlgebra& s);

}  // namespace pkla
