#pragma once

// Real Lie algebras with abelian pseudo-Kahler structures, in exact
// rational coordinates.
//
// For a pair (U, H) of complex dimension n the canonical real chart of g_U is
// (e_1..e_n, i e_1..i e_n); a vector's coordinates are (Re z, Im z) and J is
// the block matrix [[0, -I], [I, 0]].

#include <optional>

#include "pkla/apk.hpp"

namespace pkla {

/// Structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
class RealLie {
 public:
  RealLie() = default;
  explicit RealLie(Algebra<Rational> table) : t_(std::move(table)) {}
  static RealLie abelian(std::size_t dim) { return RealLie(Algebra<Rational>::zero(dim)); }

  std::size_t dim() const { return t_.dim(); }
  const Algebra<Rational>& table() const { return t_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return t_.c(i, j, k); }
  const std::vector<std::string>& labels() const { return t_.labels(); }

  RVec bracket(const RVec& x, const RVec& y) const { return t_.product(x, y); }
  /// Matrix of y -> [x, y].
  RMatrix ad(const RVec& x) const { return t_.right_mult_matrix(x); }
  RMatrix ad(std::size_t j) const { return t_.basis_right_mult(j); }

  friend bool operator==(const RealLie& a, const RealLie& b) { return a.t_ == b.t_; }

 private:
  Algebra<Rational> t_;
};

/// Skew-symmetry and Jacobi on basis elements.
ValidationReport validate_lie(const RealLie& l);

struct LieRealization {
  RealLie lie;
  RMatrix J;
  RMatrix omega;
  RMatrix gmat;  // g(x, y) = omega(J x, y)
  Algebra<Rational> lsa;  // omega(x.y, z) = -omega(y, [x, z])

  std::size_t dim() const { return lie.dim(); }
};

/// Left-symmetric product induced by a non-degenerate omega.
Algebra<Rational> lsa_from_omega(const RealLie& lie, const RMatrix& omega);

/// Fills in g and the LSA; throws DegenerateFormError if omega is singular.
LieRealization make_realization(RealLie lie, RMatrix J, RMatrix omega);

/// Every pseudo-Kahler invariant plus J(x.y) = (Jx).y and [[g,g],[g,g]] = 0.
ValidationReport validate_pk(const LieRealization& l);

/// g_U in the canonical chart; validated before returning.
LieRealization build_lie(const APKPair& p);
/// Same construction without re-checking the pseudo-Kahler identities.
LieRealization realize(const APKPair& p);

/// 2n x 2n matrix of the complex structure (e, ie) -> (ie, -e).
RMatrix canonical_J(std::size_t n);

struct AffLie {
  RealLie lie;
  RMatrix J;
};

/// aff(A) = A + A with [(a,b),(a',b')] = (0, ab' - a'b) and J(a,b) = (-b,a).
AffLie aff(const RealAlgebra& a);

/// Real commutative associative algebra with symmetric B, B(ab,c) = B(a,bc).
class RealSymmetricAlgebra {
 public:
  RealSymmetricAlgebra() = default;
  /// Throws PreconditionError with the failed identities.
  RealSymmetricAlgebra(RealAlgebra a, RMatrix b);

  std::size_t dim() const { return a_.dim(); }
  const RealAlgebra& algebra() const { return a_; }
  const RMatrix& form() const { return b_; }

 private:
  RealAlgebra a_;
  RMatrix b_;
};

ValidationReport validate_symmetric(const RealAlgebra& a, const RMatrix& b);

/// aff(A) with omega((a,b),(a',b')) = B(a,b') - B(b,a').
LieRealization standard_pk(const RealSymmetricAlgebra& s);
/// standard_pk without the validation pass.
LieRealization standard_realization(const RealSymmetricAlgebra& s);

/// Checks that phi maps l1 onto l2 preserving bracket, J and omega.
ValidationReport verify_isomorphism(const LieRealization& l1, const LieRealization& l2, const RMatrix& phi);

struct ComplexifiedPair {
  APKPair pair;
  RMatrix iso;  // standard_pk(S) -> build_lie(pair), (a,b) -> -(a+ib)/2
};

ComplexifiedPair complexify_pair(const RealSymmetricAlgebra& s);

struct PairFromPK {
  APKPair pair;
  RMatrix adapted_basis;  // columns x_1..x_n, Jx_1..Jx_n
  RMatrix iso;            // L -> build_lie(pair)
};

/// Inverse construction: U = {x - iJx} with the LSA-induced product.
PairFromPK pair_from_pk(const LieRealization& l);

/// J-adapted basis chosen greedily from the standard basis.
RMatrix adapted_basis(const RMatrix& J);

/// Bracket, J, omega and LSA written in the basis given by the columns of q.
LieRealization transform_realization(const LieRealization& l, const RMatrix& q);
RealLie transform_lie(const RealLie& l, const RMatrix& q);

struct CocycleSpace {
  std::vector<RMatrix> basis;        // skew matrices
  std::optional<RVec> certificate;  // common radical vector
};

CocycleSpace cocycle_space(const RealLie& l);

bool is_unimodular(const RealLie& l);
bool is_nilpotent_lie(const RealLie& l);
/// [g, [g, g]] = 0.
bool is_two_step_nilpotent_lie(const RealLie& l);
/// [[g, g], [g, g]] = 0.
bool is_two_step_solvable(const RealLie& l);
RSubspace derived_algebra(const RealLie& l);
RMatrix killing(const RealLie& l);

}  // namespace pkla
