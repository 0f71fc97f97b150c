#pragma once

#include "pkla/catalog.hpp"
#include "pkla/corpus.hpp"

namespace th {

using namespace pkla;

inline CVec e(std::size_t n, std::size_t k) { return unit_vec<Complex>(n, k); }
inline RVec re(std::size_t n, std::size_t k) { return unit_vec<Rational>(n, k); }

inline CVec vec(std::initializer_list<Complex> xs) { return CVec(xs); }

inline CMatrix random_matrix(corpus::Rng& rng, std::size_t n, long range = 3) {
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.small_complex(range);
  return m;
}

inline CMatrix random_invertible(corpus::Rng& rng, std::size_t n) {
  for (;;) {
    CMatrix m = random_matrix(rng, n);
    if (!is_zero(determinant(m))) return m;
  }
}

/// Non-degenerate hermitian matrix with small entries.
inline CMatrix random_hermitian(corpus::Rng& rng, std::size_t n) {
  for (;;) {
    CMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      m(r, r) = rng.small_rational(3);
      for (std::size_t c = r + 1; c < n; ++c) {
        m(r, c) = rng.small_complex(2);
        m(c, r) = conj(m(r, c));
      }
    }
    if (!is_zero(determinant(m))) return m;
  }
}

inline CMatrix antidiagonal(std::size_t n) {
  CMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) g(k, n - 1 - k) = 1;
  return g;
}

inline APKPair zero_pair(const CMatrix& g) { return {AssocAlgebra::zero(g.rows()), HermitianGram(g)}; }

inline CSubspace cspan(std::vector<CVec> vs, std::size_t n) { return CSubspace::span(vs, n); }

/// A handful of generated pairs of each kind for unit-level property checks.
inline std::vector<APKPair> small_corpus() {
  std::vector<APKPair> out;
  for (std::uint64_t s = 1; s <= 4; ++s)
    for (std::size_t d = 2; d <= 5; ++d) {
      out.push_back(corpus::generate(s, d, corpus::Kind::tstar).pair);
      out.push_back(corpus::generate(s, d, corpus::Kind::tower).pair);
    }
  return out;
}

}  // namespace th
