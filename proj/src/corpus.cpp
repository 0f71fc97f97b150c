#include "pkla/corpus.hpp"

#include <algorithm>
#include <set>

namespace pkla::corpus {

namespace {

CVec basis(std::size_t n, std::size_t k) { return unit_vec<Complex>(n, k); }

using Monomial = std::pair<unsigned, unsigned>;

// A random order ideal of monomials in two variables (one if univariate).
std::vector<Monomial> staircase(Rng& rng, std::size_t size, bool univariate) {
  std::vector<Monomial> set{{0, 0}};
  std::set<Monomial> in{{0, 0}};
  while (set.size() < size) {
    std::vector<Monomial> corners;
    for (const auto& [a, b] : set)
      for (Monomial c : {Monomial{a + 1, b}, Monomial{a, b + 1}}) {
        if (univariate && c.second > 0) continue;
        if (in.count(c)) continue;
        if ((c.first == 0 || in.count({c.first - 1, c.second})) && (c.second == 0 || in.count({c.first, c.second - 1})))
          corners.push_back(c);
      }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    Monomial pick = corners[rng.between(0, static_cast<long>(corners.size()) - 1)];
    set.push_back(pick);
    in.insert(pick);
  }
  return set;
}

// Monomial quotient algebra on the given monomials (which must be closed under division).
RealAlgebra monomial_algebra(const std::vector<Monomial>& ms) {
  const std::size_t m = ms.size();
  ProductTable<Rational> t(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Monomial prod{ms[i].first + ms[j].first, ms[i].second + ms[j].second};
      auto it = std::find(ms.begin(), ms.end(), prod);
      RVec v(m, Rational(0));
      if (it != ms.end()) v[it - ms.begin()] = 1;
      t.set_one_sided(i, j, v);
    }
  return t.build();
}

// N + N* with (x,f)(y,g) = (xy, f o R_y + g o R_x) and B = f(y) + g(x).
RealSymmetricAlgebra tstar_of(const RealAlgebra& n) {
  const std::size_t m = n.dim(), d = 2 * m;
  ProductTable<Rational> t(d);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      RVec v(d, Rational(0));
      for (std::size_t k = 0; k < m; ++k) v[k] = n.c(a, b, k);
      t.set_one_sided(a, b, v);
      // n_a . n^b = sum_c [n_a n_c]_b n^c
      RVec w(d, Rational(0));
      for (std::size_t c = 0; c < m; ++c) w[m + c] = n.c(a, c, b);
      t.set(a, m + b, w);
    }
  RMatrix form(d, d);
  for (std::size_t a = 0; a < m; ++a) form(a, m + a) = form(m + a, a) = 1;
  return RealSymmetricAlgebra(t.build(), form);
}

RealSymmetricAlgebra sum(const RealSymmetricAlgebra& x, const RealSymmetricAlgebra& y) {
  const std::size_t a = x.dim(), n = a + y.dim();
  RMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < a && j < a) b(i, j) = x.form()(i, j);
      if (i >= a && j >= a) b(i, j) = y.form()(i - a, j - a);
    }
  return RealSymmetricAlgebra(direct_sum(x.algebra(), y.algebra()), b);
}

std::vector<std::string> plain_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back("u" + std::to_string(k));
  return out;
}

APKPair relabel(const APKPair& p) {
  const AssocAlgebra& a = p.algebra();
  return APKPair(AssocAlgebra(a.dim(), a.constants(), plain_labels(a.dim())), p.form());
}

APKPair rebase(Rng& rng, const APKPair& p) { return relabel(transform_pair(p, random_basis_change(rng, p.dim()))); }

CMatrix random_gram(Rng& rng, std::size_t n, bool positive) {
  CMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational v = rng.between(1, 3);
    g(k, k) = (positive || rng.coin()) ? v : -v;
  }
  return g;
}

APKPair abelian_pair(Rng& rng, std::size_t n, bool positive = false) {
  return APKPair(AssocAlgebra::zero(n), HermitianGram(random_gram(rng, n, positive)));
}

// C^k with orthogonal idempotents plus an abelian part; ann(U) is the abelian part
// and meets its complement trivially.
APKPair unital_pair(Rng& rng, std::size_t k, std::size_t n, bool positive) {
  ProductTable<Complex> t(n);
  for (std::size_t j = 0; j < k; ++j) t.set(j, j, basis(n, j));
  return APKPair(t.build(), HermitianGram(random_gram(rng, n, positive)));
}

APKPair tstar_pair(Rng& rng, std::size_t n) { return complexify_pair(tstar_algebra(rng, n)).pair; }

CVec random_in(Rng& rng, const CSubspace& w) {
  CVec v(w.ambient(), Complex(0));
  for (const auto& b : w.basis()) v = v + rng.small_complex(2) * b;
  return v;
}

// Candidates for extension data; each family satisfies the hypotheses by
// construction and is still validated before use.
DoubleExtensionData random_data(Rng& rng, const APKPair& p) {
  const std::size_t n = p.dim();
  CSubspace ann = annihilator(p.algebra());
  CSubspace sq_perp = orthogonal_complement(p.form(), power_ideal(p.algebra(), 2));
  CSubspace flat_dir = ann.intersect(sq_perp);
  DoubleExtensionData d = DoubleExtensionData::trivial(n, rng.coin() ? Complex(0) : rng.small_complex(1, true),
                                                       rng.small_complex(2));
  switch (rng.between(0, 4)) {
    case 0:
      break;
    case 1:
      d.a0 = random_in(rng, ann);
      break;
    case 2:
      d.eps = 0;
      d.b0 = random_in(rng, flat_dir);
      break;
    case 3: {
      // tau y = H(w, y) w with w isotropic in ann and orthogonal to U^2
      for (int attempt = 0; attempt < 8; ++attempt) {
        CVec w = random_in(rng, flat_dir);
        if (is_zero(w) || !is_zero(p.form()(w, w))) continue;
        CMatrix m(n, n);
        CVec gw = p.form().matrix().transpose() * w;  // H(w, y) = sum_k (G^T w)_k conj(y_k)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) m(r, c) = w[r] * gw[c];
        d.tau = SemilinearOperator(m);
        break;
      }
      break;
    }
    default: {
      // D = R_v with v killing R*_U U
      std::vector<CMatrix> rows;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) rows.push_back(p.r(p.rstar(j)(basis(n, k))).matrix());
      std::vector<CVec> eqs;
      for (const auto& m : rows)
        for (std::size_t r = 0; r < n; ++r) eqs.push_back(m.row(r));
      CSubspace ok = eqs.empty() ? CSubspace::whole(n) : CSubspace::null_space(CMatrix::from_rows(eqs, n));
      CVec v = random_in(rng, ok);
      d.D = p.r(v);
      d.a0 = p.product(v, v) - d.eps * v;
      break;
    }
  }
  if (!validate_extension_data(p, d).ok()) return DoubleExtensionData::trivial(n, d.eps, d.alpha0);
  return d;
}

Generated tower_pair(Rng& rng, std::size_t dim) {
  for (;;) {
    std::size_t steps = rng.between(1, static_cast<long>(dim / 2));
    std::size_t base_dim = dim - 2 * steps;
    // bases with ann(U) meeting its complement trivially cannot be reduced further
    APKPair cur = unital_pair(rng, rng.between(0, static_cast<long>(base_dim)), base_dim, false);
    for (std::size_t s = 0; s < steps; ++s) cur = double_extend(cur, random_data(rng, cur));
    APKPair out = rebase(rng, cur);
    try {
      Tower t = tower(out);
      if (t.steps.size() == steps && !t.diagnostic) return {out, steps, base_dim};
    } catch (const EigenvalueOutsideField&) {
    }
  }
}

}  // namespace

Rational Rng::small_rational(long range, bool nonzero) {
  for (;;) {
    Rational r(between(-range, range), between(1, 2));
    r.canonicalize();
    if (!nonzero || !is_zero(r)) return r;
  }
}

Complex Rng::small_complex(long range, bool nonzero) {
  for (;;) {
    Complex z(Rational(between(-range, range)), Rational(between(-range, range)));
    if (!nonzero || !is_zero(z)) return z;
  }
}

std::optional<Kind> parse_kind(const std::string& s) {
  if (s == "tstar") return Kind::tstar;
  if (s == "tower") return Kind::tower;
  if (s == "abelian") return Kind::abelian;
  return std::nullopt;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::tstar:
      return "tstar";
    case Kind::tower:
      return "tower";
    default:
      return "abelian";
  }
}

namespace {

// n random transvections e_j += c e_i followed by a column shuffle.
template <class T>
Matrix<T> sparse_change(Rng& rng, std::size_t n, const std::vector<T>& coeffs) {
  Matrix<T> q = Matrix<T>::identity(n);
  if (n < 2) return q;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t i = rng.between(0, static_cast<long>(n) - 1), j = rng.between(0, static_cast<long>(n) - 2);
    if (j >= i) ++j;
    const T& c = coeffs[rng.between(0, static_cast<long>(coeffs.size()) - 1)];
    for (std::size_t r = 0; r < n; ++r) q(r, j) += c * q(r, i);
  }
  for (std::size_t k = n - 1; k > 0; --k) {
    std::size_t s = rng.between(0, static_cast<long>(k));
    for (std::size_t r = 0; r < n; ++r) std::swap(q(r, k), q(r, s));
  }
  return q;
}

}  // namespace

CMatrix random_basis_change(Rng& rng, std::size_t n) {
  return sparse_change<Complex>(rng, n, {Complex(1), Complex(-1), Complex::i(), -Complex::i()});
}

RMatrix random_real_basis_change(Rng& rng, std::size_t n) {
  return sparse_change<Rational>(rng, n, {Rational(1), Rational(-1)});
}

RealSymmetricAlgebra tstar_algebra(Rng& rng, std::size_t dim) {
  std::optional<RealSymmetricAlgebra> s;
  if (dim >= 2) {
    const std::size_t m = dim / 2;
    bool unital = rng.coin();
    auto ms = staircase(rng, unital ? m : m + 1, rng.coin());
    if (!unital) ms.erase(ms.begin());  // the maximal ideal
    s = tstar_of(monomial_algebra(ms));
  }
  if (dim % 2) {
    ProductTable<Rational> t(1);
    if (rng.coin()) t.set(0, 0, RVec{Rational(1)});
    RMatrix b(1, 1);
    b(0, 0) = rng.small_rational(2, true);
    RealSymmetricAlgebra one(t.build(), b);
    s = s ? sum(*s, one) : one;
  }
  if (!s) return RealSymmetricAlgebra(RealAlgebra::zero(0), RMatrix(0, 0));
  RMatrix q = random_real_basis_change(rng, dim);
  return RealSymmetricAlgebra(change_basis(s->algebra(), q), q.transpose() * s->form() * q);
}

Generated generate(std::uint64_t seed, std::size_t dim, Kind kind) {
  if (dim > max_dim) throw PreconditionError("dimension " + std::to_string(dim) + " exceeds " + std::to_string(max_dim));
  Rng rng(seed);
  switch (kind) {
    case Kind::abelian:
      return {rebase(rng, abelian_pair(rng, dim)), 0, dim};
    case Kind::tstar:
      return {rebase(rng, tstar_pair(rng, dim)), 0, dim};
    default:
      if (dim < 2) throw PreconditionError("tower pairs need dimension at least 2");
      return tower_pair(rng, dim);
  }
}

APKPair positive_definite(std::uint64_t seed, std::size_t unital, std::size_t abelian) {
  Rng rng(seed);
  return rebase(rng, unital_pair(rng, unital, unital + abelian, true));
}

APKPair einstein(std::uint64_t seed, std::size_t copies, const Rational& beta) {
  Rng rng(seed);
  ProductTable<Complex> t(copies);
  CMatrix g(copies, copies);
  for (std::size_t k = 0; k < copies; ++k) {
    t.set(k, k, basis(copies, k));
    g(k, k) = Complex(Rational(-4) * beta);
  }
  return rebase(rng, APKPair(t.build(), HermitianGram(g)));
}

}  // namespace pkla::corpus
