#pragma once

// Deterministic random pairs for property testing. Everything is driven by a
// 64-bit Mersenne twister with plain modulo reduction, so the output depends
// only on the seed and not on the standard library's distributions.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pkla/extension.hpp"
#include "pkla/liereal.hpp"

namespace pkla::corpus {

inline constexpr std::size_t max_dim = 12;

enum class Kind { tstar, tower, abelian };

std::optional<Kind> parse_kind(const std::string& s);
std::string kind_name(Kind k);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return g_() % 2 == 0; }
  Rational small_rational(long range, bool nonzero = false);
  Complex small_complex(long range, bool nonzero = false);

 private:
  std::mt19937_64 g_;
};

struct Generated {
  APKPair pair;
  std::size_t steps = 0;  // double extensions on top of the base (tower kind)
  std::size_t base_dim = 0;
};

/// kind tstar: complexification of a T*-extension; abelian: zero product;
/// tower: chain of double extensions over an irreducible base.
Generated generate(std::uint64_t seed, std::size_t dim, Kind kind);

/// Symmetric algebra N + N* with real dimension dim (odd dims get a one-dimensional summand).
RealSymmetricAlgebra tstar_algebra(Rng& rng, std::size_t dim);

/// C^p (orthogonal idempotents) + abelian part with positive H, randomly re-based.
APKPair positive_definite(std::uint64_t seed, std::size_t unital, std::size_t abelian);

/// Orthogonal sum of copies of C with 1.1 = 1 and H = -4 beta, randomly re-based.
APKPair einstein(std::uint64_t seed, std::size_t copies, const Rational& beta);

/// Random unimodular change of basis over Z[i] (resp. Z), kept sparse so entries stay small.
CMatrix random_basis_change(Rng& rng, std::size_t n);
RMatrix random_real_basis_change(Rng& rng, std::size_t n);

}  // namespace pkla::corpus
