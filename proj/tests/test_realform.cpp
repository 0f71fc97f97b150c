#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pkla/realform.hpp"

using namespace pkla;
using th::re;

namespace {

/// R^k with coordinate products and B = diag(b).
RealSymmetricAlgebra split_algebra(const std::vector<Rational>& b) {
  const std::size_t k = b.size();
  ProductTable<Rational> t(k);
  RMatrix form(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    t.set(j, j, re(k, j));
    form(j, j) = b[j];
  }
  return {t.build(), form};
}

std::vector<RealSymmetricAlgebra> tstar_samples() {
  std::vector<RealSymmetricAlgebra> out;
  corpus::Rng rng(77);
  for (std::size_t d = 1; d <= 6; ++d)
    for (int k = 0; k < 3; ++k) out.push_back(corpus::tstar_algebra(rng, d));
  return out;
}

bool ann_meets_perp(const RealSymmetricAlgebra& s) {
  RSubspace ann = annihilator(s.algebra());
  std::vector<RVec> bv;
  for (const auto& v : ann.basis()) bv.push_back(s.form() * v);
  RSubspace perp = RSubspace::null_space(RMatrix::from_rows(bv, s.dim()));
  return !ann.intersect(perp).is_zero();
}

}  // namespace

TEST_SUITE("realform") {
  TEST_CASE("sigma recovers conjugation") {
    std::vector<RealSymmetricAlgebra> samples = {split_algebra({1}), split_algebra({2, -1}),
                                                 split_algebra({1, 1, -3})};
    for (const auto& s : tstar_samples())
      if (annihilator(s.algebra()).is_zero()) samples.push_back(s);
    REQUIRE(samples.size() > 4);
    for (const auto& s : samples) {
      ComplexifiedPair c = complexify_pair(s);
      RealFormCertificate cert = sigma_from_adjoints(c.pair);
      CHECK(cert.sigma.matrix() == CMatrix::identity(s.dim()));
      CHECK(validate_sigma(c.pair, cert.sigma).ok());
      CHECK(cert.S.dim() == s.dim());
      CHECK(verify_isomorphism(standard_pk(s), standard_pk(cert.S), inverse(cert.iso) * c.iso).ok());
    }
    RealFormCertificate ec = sigma_from_adjoints(catalog::einstein_c(2));
    CHECK(ec.sigma.matrix() == CMatrix::identity(1));
    CHECK(ec.S.dim() == 1);
    CHECK_THROWS_AS(sigma_from_adjoints(catalog::two_step_5d()), PreconditionError);
  }

  TEST_CASE("annihilator splitting") {
    APKPair z = th::zero_pair(CMatrix::identity(2));
    auto s = split_ann(z);
    REQUIRE(s.has_value());
    CHECK(s->ann_part.dim() == 2);
    CHECK(s->perp_part.dim() == 0);

    APKPair sum = direct_sum(z, catalog::einstein_c());
    auto t = split_ann(sum);
    REQUIRE(t.has_value());
    CHECK(t->ann_part == z);
    CHECK(t->perp_part == catalog::einstein_c());
    CHECK(direct_sum(t->ann_part, t->perp_part) == transform_pair(sum, t->basis_change));

    CHECK_FALSE(split_ann(catalog::flat_4d()).has_value());
  }

  TEST_CASE("detect_aff round trip") {
    for (const auto& s : tstar_samples()) {
      ComplexifiedPair c = complexify_pair(s);
      auto f = detect_aff(c.pair);
      CHECK(f.has_value() == !ann_meets_perp(s));
      if (!f) continue;
      CHECK(oracle::invariant_form(f->S.algebra(), f->S.form()));
      CHECK(verify_isomorphism(standard_pk(s), standard_pk(f->S), inverse(f->iso) * c.iso).ok());
    }
    CHECK_FALSE(detect_aff(catalog::two_step_5d()).has_value());
    CHECK_FALSE(detect_aff(complexify_pair(catalog::kodaira_thurston()).pair).has_value());
  }

  TEST_CASE("Einstein pair recovers R with the trace form") {
    for (Rational gamma : {Rational(1), Rational(5, 2)}) {
      auto f = detect_aff(catalog::einstein_c(gamma));
      REQUIRE(f.has_value());
      const RealAlgebra& a = f->S.algebra();
      REQUIRE(a.dim() == 1);
      RVec x = re(1, 0);
      CHECK(f->S.form()(0, 0) == gamma * a.right_mult_matrix(a.product(x, x)).trace());
    }
  }

  TEST_CASE("unital decompositions") {
    RealSymmetricAlgebra rr = split_algebra({1, -2});
    CHECK(verify_unital_decomposition(rr, {re(2, 0), re(2, 1)}).ok());
    CHECK_FALSE(verify_unital_decomposition(rr, {re(2, 0)}).ok());
    CHECK(verify_unital_decomposition(rr, {re(2, 0) + re(2, 1)}).ok());  // one block, A itself
    CHECK(verify_unital_decomposition(rr, {Rational(2) * re(2, 0), re(2, 1)}).count("idempotent") == 1);
    auto units = split_units(rr);
    REQUIRE(units.has_value());
    CHECK(units->size() == 2);
    CHECK(verify_unital_decomposition(rr, *units).ok());

    RealSymmetricAlgebra r = split_algebra({3});
    CHECK(verify_unital_decomposition(r, {re(1, 0)}).ok());

    ValidationReport kt = verify_unital_decomposition(catalog::kodaira_thurston(), {});
    CHECK_FALSE(kt.ok());
    CHECK(kt.count("spanning") + kt.count("orthogonal_to_ann") > 0);
  }
}
