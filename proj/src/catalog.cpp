#include "pkla/catalog.hpp"

namespace pkla::catalog {

namespace {

std::vector<std::string> labels(const std::string& stem, std::size_t n, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(stem + std::to_string(first + k));
  return out;
}

}  // namespace

APKPair two_step_5d() {
  ProductTable<Complex> t(5);
  t.set(4, 3, unit_vec<Complex>(5, 2));
  t.set(4, 4, unit_vec<Complex>(5, 2));
  CMatrix g(5, 5);
  for (std::size_t j = 0; j < 5; ++j) g(j, 4 - j) = 1;
  return {t.build(labels("u", 5, 0)), HermitianGram(g)};
}

APKPair flat_4d() {
  ProductTable<Complex> t(4);
  t.set(1, 3, unit_vec<Complex>(4, 1));
  t.set(3, 3, unit_vec<Complex>(4, 3));
  CMatrix g(4, 4);
  g(0, 3) = g(3, 0) = 1;
  g(1, 2) = g(2, 1) = 1;
  return {t.build(labels("u", 4, 0)), HermitianGram(g)};
}

APKPair einstein_c(const Rational& beta) {
  ProductTable<Complex> t(1);
  t.set(0, 0, {Complex(1)});
  CMatrix g(1, 1);
  g(0, 0) = Complex(Rational(-4 * beta));
  return {t.build({"1"}), HermitianGram(g)};
}

RealSymmetricAlgebra kodaira_thurston(const Rational& t) {
  ProductTable<Rational> a(2);
  a.set(0, 0, {0, 1});
  RMatrix b(2, 2);
  b(0, 0) = t;
  b(0, 1) = b(1, 0) = 1;
  return {a.build({"x", "x2"}), b};
}

RealAlgebra remark_algebra() {
  ProductTable<Rational> a(3);
  a.set(0, 0, {0, 0, 1});
  a.set(1, 1, {0, 0, 1});
  return a.build(labels("a", 3, 1));
}

LieRealization n7() {
  ProductTable<Rational> t(6);
  auto set = [&](std::size_t i, std::size_t j, RVec v) {
    t.set_one_sided(i, j, v);
    t.set_one_sided(j, i, -v);
  };
  const Rational h(1, 2);
  set(0, 1, {0, 0, -1, 0, 0, -h});
  set(0, 3, {0, 4, 0, 0, 0, 0});
  set(0, 4, {0, 0, h, 0, 0, 1});
  set(1, 3, {0, 0, h, 0, 0, 1});
  set(3, 4, {0, 0, -1, 0, 0, -h});
  RMatrix w(6, 6);
  auto put = [&](std::size_t i, std::size_t j, long v) {
    w(i, j) = v;
    w(j, i) = -v;
  };
  put(0, 2, 4);
  put(0, 3, -2);
  put(1, 4, -2);
  put(3, 5, 4);
  return make_realization(RealLie(t.build(labels("E", 6, 1))), canonical_J(3), w);
}

std::vector<std::string> names() {
  return {"remark-2-10", "n7", "two-step-5d", "flat-4d", "kodaira-thurston", "einstein-c"};
}

}  // namespace pkla::catalog
