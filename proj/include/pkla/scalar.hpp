#pragma once

// Exact scalars: arbitrary precision rationals and Gaussian rationals Q(i).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pkla {

using Rational = mpq_class;

/// Raised for division by zero and similar field-level misuse.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element of Q(i). Both parts stay in canonical reduced form because
/// every gmpxx arithmetic result is canonical; constructors canonicalize.
struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Complex i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
bool operator==(const Complex& a, const Complex& b);

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Rational conj(const Rational& r) { return r; }
/// |z|^2, always rational.
inline Rational norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Complex& z) { return z.is_zero(); }

Rational inverse(const Rational& r);
Complex inverse(const Complex& z);

/// Canonical text: "p", "p/q", "p/qi", "p/q+r/si", "p/q-r/si".
std::string to_string(const Rational& r);
std::string to_string(const Complex& z);

/// Parses "p", "p/q", "i", "-i", "r/si", "p/q+r/si". Throws std::invalid_argument
/// on anything else, including decimal points and zero denominators.
Rational parse_rational(std::string_view text);
Complex parse_complex(std::string_view text);

}  // namespace pkla
