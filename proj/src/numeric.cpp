#include "anharmonic/numeric.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace anharmonic {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned working_digits() { return Real::default_precision(); }

namespace {
// MPFR-backed numbers otherwise start at 20 digits.
const bool default_precision_set = [] {
  Real::default_precision(kDefaultDigits);
  return true;
}();
} // namespace

Real promote(const Real& x) { return Real(x, working_digits()); }
Complex promote(const Complex& z) { return Complex(promote(z.re), promote(z.im)); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps the intermediate products in range.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    Real t = o.im / o.re;
    Real d = o.re + o.im * t;
    Real r = (re + im * t) / d;
    im = (im - re * t) / d;
    re = r;
  } else {
    Real t = o.re / o.im;
    Real d = o.re * t + o.im;
    Real r = (re * t + im) / d;
    im = (im * t - re) / d;
    re = r;
  }
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(const Real& s, Complex a) {
  a.re *= s;
  a.im *= s;
  return a;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) { return Complex(boost::multiprecision::log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return Complex();
  Real r = abs(z);
  Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.re)) / 2);
  if (z.re >= 0) return Complex(a, z.im / (2 * a));
  Real b = z.im >= 0 ? a : Real(-a);
  return Complex(boost::multiprecision::abs(z.im) / (2 * a), b);
}

Complex pow(const Complex& base, const Complex& exponent) {
  if (base.re == 0 && base.im == 0) return Complex();
  return exp(exponent * log(base));
}

Complex pow(const Complex& base, int exponent) {
  Complex result(1.0);
  Complex b = exponent < 0 ? Complex(1.0) / base : base;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Complex sin(const Complex& z) {
  return Complex(boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
                 boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im));
}

Complex polar(const Real& r, const Real& phase) {
  return Complex(r * boost::multiprecision::cos(phase), r * boost::multiprecision::sin(phase));
}

Real to_real(const Rational& q) {
  Real num(boost::multiprecision::numerator(q).str());
  Real den(boost::multiprecision::denominator(q).str());
  return num / den;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Real digamma(const Real& x) {
  Real r;
  mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real beta(const Real& a, const Real& b) {
  using boost::multiprecision::lgamma;
  return boost::multiprecision::exp(lgamma(a) + lgamma(b) - lgamma(a + b));
}

const std::vector<Rational>& bernoulli_even(std::size_t count) {
  static std::mutex mutex;
  static std::vector<Rational> all{Rational(1)}; // B_0, B_1, B_2, ...
  static std::vector<Rational> even{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  std::size_t need = 2 * count + 1;
  while (all.size() < need) {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    std::size_t n = all.size();
    BigInt binom = 1; // C(n+1, 0)
    Rational sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += Rational(binom) * all[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    all.push_back(-sum / Rational(binom));
  }
  while (even.size() < count + 1) even.push_back(all[2 * even.size()]);
  return even;
}

namespace {

Complex lgamma_stirling(const Complex& z) {
  const unsigned digits = working_digits();
  const Real radius(static_cast<double>(digits) + 10.0);
  Complex w = z;
  Complex prod(1.0);
  bool shifted = false;
  while (abs(w) < radius) {
    prod *= w;
    w.re += 1;
    shifted = true;
  }
  Complex result = (w - Complex(0.5)) * log(w) - w + Complex(boost::multiprecision::log(2 * pi()) / 2);
  const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) - 5);
  const Complex inv = Complex(1.0) / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  std::size_t max_terms = digits + 20;
  const auto& bern = bernoulli_even(max_terms);
  for (std::size_t k = 1; k <= max_terms; ++k) {
    Real c = to_real(bern[k] / Rational(BigInt(2 * k) * (2 * k - 1)));
    Complex term = c * power;
    result += term;
    if (abs(term) < tol) break;
    power *= inv2;
  }
  if (shifted) result -= log(prod);
  return result;
}

} // namespace

Complex lgamma(const Complex& z) {
  if (z.re < Real(0.5)) {
    Complex piz = pi() * z;
    return Complex(boost::multiprecision::log(pi())) - log(sin(piz)) - lgamma(Complex(1.0) - z);
  }
  return lgamma_stirling(z);
}

Complex gamma(const Complex& z) {
  if (z.re < Real(0.5)) return Complex(pi()) / (sin(pi() * z) * gamma(Complex(1.0) - z));
  return exp(lgamma_stirling(z));
}

Complex rgamma(const Complex& z) {
  if (z.re < Real(0.5)) return sin(pi() * z) * gamma(Complex(1.0) - z) / Complex(pi());
  return exp(-lgamma_stirling(z));
}

std::string format(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

} // namespace anharmonic
