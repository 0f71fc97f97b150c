#include "pkla/poly.hpp"

#include <algorithm>
#include <map>

namespace pkla {

template <class T>
Poly<T> char_poly(const Matrix<T>& a) {
  if (!a.square()) throw DimensionError("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Poly<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -((a * m).trace() * inverse(T(static_cast<long>(k))));
  }
  return c;
}

template <class T>
T evaluate(const Poly<T>& p, const T& x) {
  T acc(0);
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

template <class T>
std::string poly_to_string(const Poly<T>& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (is_zero(p[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& value) {
  mpz_class n = abs(value);
  if (n == 0) throw ArithmeticError("cannot factor zero");
  std::vector<std::pair<mpz_class, unsigned>> out;
  auto strip = [&](const mpz_class& d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(2);
  const unsigned long bound = 1000000;
  for (unsigned long d = 3; d <= bound && mpz_class(d) * d <= n; d += 2) strip(mpz_class(d));
  if (n > 1) {
    if (n > mpz_class(bound) * bound && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw ArithmeticError("integer too hard to factor: " + n.get_str());
    out.emplace_back(n, 1);
  }
  return out;
}

namespace {

std::vector<mpz_class> integer_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

mpz_class lcm_of_denominators(const std::vector<Rational>& xs) {
  mpz_class l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

bool is_gaussian_integer(const Complex& z) { return z.re.get_den() == 1 && z.im.get_den() == 1; }

// a + bi with a^2 + b^2 = p for a prime p = 1 mod 4.
Complex two_squares(const mpz_class& p) {
  mpz_class e = (p - 1) / 4, t, r;
  for (mpz_class c = 2;; ++c) {
    mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((t * t + 1) % p == 0) break;
  }
  mpz_class a = p, b = t;
  while (b * b > p) {
    r = a % b;
    a = b;
    b = r;
  }
  mpz_class rest = p - b * b, s = sqrt(rest);
  if (s * s != rest) throw ArithmeticError("two-squares decomposition failed for " + p.get_str());
  return {Rational(b), Rational(s)};
}

// Gaussian-integer divisors of c up to units, via the primes dividing N(c).
std::vector<Complex> gaussian_divisors(const Complex& c) {
  mpz_class nrm = norm(c).get_num();
  std::vector<Complex> divs{Complex(1)};
  Complex rest = c;
  for (const auto& [p, e] : factor_integer(nrm)) {
    std::vector<Complex> primes;
    if (p == 2)
      primes.push_back({Rational(1), Rational(1)});
    else if (p % 4 == 3)
      primes.push_back(Complex(Rational(p)));
    else {
      Complex pi = two_squares(p);
      primes.push_back(pi);
      primes.push_back(conj(pi));
    }
    for (const auto& pi : primes) {
      unsigned mult = 0;
      while (true) {
        Complex q = rest / pi;
        if (!is_gaussian_integer(q)) break;
        rest = q;
        ++mult;
      }
      std::size_t base = divs.size();
      Complex pk(1);
      for (unsigned k = 1; k <= mult; ++k) {
        pk = pk * pi;
        for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      }
    }
  }
  return divs;
}

bool complex_less(const Complex& a, const Complex& b) { return a.re < b.re || (a.re == b.re && a.im < b.im); }

template <class T>
Poly<T> strip_zero_roots(Poly<T> p, bool& had_zero) {
  while (p.size() > 1 && is_zero(p.back())) p.pop_back();
  had_zero = false;
  while (p.size() > 1 && is_zero(p.front())) {
    p.erase(p.begin());
    had_zero = true;
  }
  return p;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& input) {
  bool zero_root = false;
  Poly<Rational> p = strip_zero_roots(input, zero_root);
  std::vector<Rational> roots;
  if (zero_root) roots.push_back(0);
  if (p.size() > 1) {
    mpz_class l = lcm_of_denominators(p);
    std::vector<mpz_class> a;
    for (const auto& c : p) a.push_back(mpz_class(c * l));
    for (const auto& num : integer_divisors(a.front()))
      for (const auto& den : integer_divisors(a.back()))
        for (int s : {1, -1}) {
          Rational r(s * num, den);
          r.canonicalize();
          if (is_zero(evaluate(p, r)) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Complex> gaussian_roots(const Poly<Complex>& input) {
  bool zero_root = false;
  Poly<Complex> p = strip_zero_roots(input, zero_root);
  std::vector<Complex> roots;
  if (zero_root) roots.push_back(Complex(0));
  if (p.size() > 1) {
    std::vector<Rational> parts;
    for (const auto& c : p) {
      parts.push_back(c.re);
      parts.push_back(c.im);
    }
    Complex l(Rational(lcm_of_denominators(parts)));
    for (auto& c : p) c = c * l;
    const Complex units[] = {Complex(1), Complex(-1), Complex::i(), -Complex::i()};
    auto nums = gaussian_divisors(p.front());
    auto dens = gaussian_divisors(p.back());
    for (const auto& num : nums)
      for (const auto& den : dens)
        for (const auto& u : units) {
          Complex r = u * num / den;
          if (std::find_if(roots.begin(), roots.end(), [&](const Complex& x) { return x == r; }) != roots.end())
            continue;
          if (is_zero(evaluate(p, r))) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end(), complex_less);
  return roots;
}

template <class T>
bool is_nilpotent_matrix(const Matrix<T>& m) {
  Matrix<T> pw = Matrix<T>::identity(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    pw = pw * m;
    if (pw.is_zero()) return true;
  }
  return pw.is_zero();
}

template <class T>
std::vector<Vec<T>> generalized_eigenspace(const Matrix<T>& a, const T& lambda) {
  const std::size_t n = a.rows();
  Matrix<T> b = a - lambda * Matrix<T>::identity(n), pw = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) pw = pw * b;
  return kernel(pw);
}

#define PKLA_INSTANTIATE(T)                                                     \
  template Poly<T> char_poly(const Matrix<T>&);                                 \
  template T evaluate(const Poly<T>&, const T&);                                \
  template std::string poly_to_string(const Poly<T>&);                          \
  template bool is_nilpotent_matrix(const Matrix<T>&);                          \
  template std::vector<Vec<T>> generalized_eigenspace(const Matrix<T>&, const T&);

PKLA_INSTANTIATE(Rational)
PKLA_INSTANTIATE(Complex)

#undef PKLA_INSTANTIATE

}  // namespace pkla
