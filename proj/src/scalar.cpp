#include "pkla/scalar.hpp"

#include <cctype>

namespace pkla {

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this *= inverse(o);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
// Most entries met in practice are real, so those cases skip the cross terms.
Complex operator*(const Complex& a, const Complex& b) {
  Complex r;
  const bool ar = sgn(a.im) == 0, br = sgn(b.im) == 0;
  if (ar) {
    mpq_mul(r.re.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
    if (!br) mpq_mul(r.im.get_mpq_t(), a.re.get_mpq_t(), b.im.get_mpq_t());
  } else if (br) {
    mpq_mul(r.re.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
    mpq_mul(r.im.get_mpq_t(), a.im.get_mpq_t(), b.re.get_mpq_t());
  } else {
    Rational t;
    mpq_mul(r.re.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
    mpq_mul(t.get_mpq_t(), a.im.get_mpq_t(), b.im.get_mpq_t());
    r.re -= t;
    mpq_mul(r.im.get_mpq_t(), a.re.get_mpq_t(), b.im.get_mpq_t());
    mpq_mul(t.get_mpq_t(), a.im.get_mpq_t(), b.re.get_mpq_t());
    r.im += t;
  }
  return r;
}
Complex operator/(const Complex& a, const Complex& b) { return a * inverse(b); }
Complex operator-(const Complex& a) { return {Rational(-a.re), Rational(-a.im)}; }
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Rational inverse(const Rational& r) {
  if (sgn(r) == 0) throw ArithmeticError("division by zero");
  return 1 / r;
}

Complex inverse(const Complex& z) {
  Rational n = norm(z);
  if (sgn(n) == 0) throw ArithmeticError("division by zero");
  return {Rational(z.re / n), Rational(-z.im / n)};
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Complex& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  std::string im = (z.im == 1) ? "" : (z.im == -1 ? "-" : z.im.get_str());
  if (sgn(z.re) == 0) return im + "i";
  std::string out = z.re.get_str();
  if (sgn(z.im) > 0) out += '+';
  return out + im + "i";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  if (text.back() != 'i') return Complex(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+")
    im = 1;
  else if (im_part == "-")
    im = -1;
  else
    im = parse_rational(im_part);
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, im};
}

}  // namespace pkla
