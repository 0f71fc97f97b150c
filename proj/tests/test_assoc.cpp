#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace pkla;
using th::e;

TEST_SUITE("assoc") {
  TEST_CASE("validate_assoc") {
    CHECK(validate_assoc(AssocAlgebra::zero(4)).ok());
    CHECK(validate_assoc(catalog::two_step_5d().algebra()).ok());

    ProductTable<Complex> t(2);
    t.set_one_sided(0, 1, th::vec({0, 1}));
    ValidationReport rep = validate_assoc(t.build());
    CHECK(rep.count("commutativity") == 1);
    CHECK(rep.items().front().indices == std::vector<std::size_t>{0, 1, 1});

    ProductTable<Complex> na(2);  // x x = y, y x = x: commutative, not associative
    na.set(0, 0, th::vec({0, 1}));
    na.set(0, 1, th::vec({1, 0}));
    CHECK_FALSE(oracle::associative_commutative(na.build()));
    CHECK(validate_assoc(na.build()).count("associativity") > 0);
  }

  TEST_CASE("right multiplication") {
    AssocAlgebra u = catalog::flat_4d().algebra();
    CHECK(right_mult(u, CVec(4, Complex(0))).is_zero());
    LinearOperator r3 = right_mult(u, e(4, 3));
    CHECK(r3(e(4, 3)) == e(4, 3));
    CHECK(r3(e(4, 1)) == e(4, 1));
    CHECK(r3(e(4, 0)) == CVec(4, Complex(0)));
    CHECK(r3(e(4, 2)) == CVec(4, Complex(0)));

    corpus::Rng rng(2);
    for (const APKPair& p : th::small_corpus()) {
      const std::size_t n = p.dim();
      REQUIRE(oracle::associative_commutative(p.algebra()));
      CVec x(n), y(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = rng.small_complex(2), y[k] = rng.small_complex(2);
      LinearOperator rx = right_mult(p.algebra(), x), ry = right_mult(p.algebra(), y);
      CHECK(rx * ry == ry * rx);
      CHECK(rx * ry == right_mult(p.algebra(), oracle::mult(p.algebra(), x, y)));
      CHECK(rx(y) == oracle::mult(p.algebra(), y, x));
    }
  }

  TEST_CASE("annihilator") {
    CHECK(annihilator(AssocAlgebra::zero(3)) == CSubspace::whole(3));
    CHECK(annihilator(catalog::two_step_5d().algebra()) == th::cspan({e(5, 0), e(5, 1), e(5, 2)}, 5));
    CHECK(annihilator(catalog::flat_4d().algebra()) == th::cspan({e(4, 0), e(4, 2)}, 4));
  }

  TEST_CASE("power ideals and nilpotency") {
    AssocAlgebra u5 = catalog::two_step_5d().algebra(), u4 = catalog::flat_4d().algebra();
    CHECK(power_ideal(u5, 2) == th::cspan({e(5, 2)}, 5));
    CHECK(power_ideal(u5, 3).is_zero());
    CHECK(power_ideal(AssocAlgebra::zero(3), 2).is_zero());
    for (std::size_t k = 2; k <= 5; ++k) CHECK(power_ideal(u4, k) == th::cspan({e(4, 1), e(4, 3)}, 4));

    Nilpotency n5 = is_nilpotent(u5), n4 = is_nilpotent(u4), n0 = is_nilpotent(AssocAlgebra::zero(3));
    CHECK(n5.nilpotent);
    CHECK(n5.index == 3u);
    CHECK_FALSE(n4.nilpotent);
    CHECK_FALSE(n4.index.has_value());
    CHECK(n0.nilpotent);
    CHECK(n0.index == 2u);
  }

  TEST_CASE("ideal properties on generated algebras") {
    for (const APKPair& p : th::small_corpus()) {
      const AssocAlgebra& u = p.algebra();
      const std::size_t n = u.dim();
      CSubspace ann = annihilator(u);
      for (std::size_t k = 2; k <= 4; ++k) {
        CSubspace ideal = power_ideal(u, k);
        for (const auto& v : ideal.basis())
          for (std::size_t j = 0; j < n; ++j) CHECK(ideal.contains(oracle::mult(u, v, e(n, j))));
      }
      for (const auto& v : ann.basis())
        for (std::size_t j = 0; j < n; ++j) CHECK(is_zero(oracle::mult(u, v, e(n, j))));
      Nilpotency nil = is_nilpotent(u);
      if (nil.nilpotent) {
        if (*nil.index > 2) CHECK(ann.contains(power_ideal(u, *nil.index - 1)));
        for (std::size_t j = 0; j < n; ++j) CHECK(real_trace(p.r(j)) == 0);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) CHECK(p.r(i) * p.r(j) == p.r(j) * p.r(i));
    }
  }

  TEST_CASE("basis change and restriction") {
    corpus::Rng rng(6);
    AssocAlgebra u = catalog::two_step_5d().algebra();
    CMatrix q = th::random_invertible(rng, 5);
    AssocAlgebra v = change_basis(u, q);
    CHECK(validate_assoc(v).ok());
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        CHECK(q * v.product(e(5, i), e(5, j)) == u.product(q.column(i), q.column(j)));
    CHECK(change_basis(v, inverse(q)) == u);
    AssocAlgebra r = restrict_to(u, {e(5, 2), e(5, 3), e(5, 4)});
    CHECK(r.dim() == 3);
    CHECK(r.product(e(3, 2), e(3, 2)) == e(3, 0));
    CHECK_THROWS_AS(restrict_to(u, {e(5, 4)}), PreconditionError);
  }
}
