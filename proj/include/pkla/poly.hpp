#pragma once

// Univariate polynomials over Q and Q(i): characteristic polynomials and
// exact root search. Coefficients are stored lowest degree first.

#include <string>
#include <vector>

#include "pkla/matrix.hpp"

namespace pkla {

template <class T>
using Poly = std::vector<T>;

/// det(x I - A), monic, via Faddeev-LeVerrier.
template <class T>
Poly<T> char_poly(const Matrix<T>& a);

template <class T>
T evaluate(const Poly<T>& p, const T& x);

template <class T>
std::string poly_to_string(const Poly<T>& p);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

/// Distinct roots in Q(i), ordered by (re, im).
std::vector<Complex> gaussian_roots(const Poly<Complex>& p);

/// Prime factorization of |n| > 0 by trial division; throws ArithmeticError
/// when a cofactor beyond the trial bound is composite.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// M with M^k = 0 for k = size.
template <class T>
bool is_nilpotent_matrix(const Matrix<T>& m);

/// Kernel of (A - lambda I)^n.
template <class T>
std::vector<Vec<T>> generalized_eigenspace(const Matrix<T>& a, const T& lambda);

}  // namespace pkla
