#pragma once

#include "anharmonic/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace anharmonic {

/// Variable-precision MPFR float. Every value carries the decimal precision
/// it was created at (`x.precision()`); new values pick up the current
/// default, which is managed with PrecisionScope.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 40;

/// RAII guard for the working decimal precision.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  unsigned saved_;
};

unsigned working_digits();

/// Copy at the current working precision. Arithmetic keeps the precision of
/// its operands, so inputs must be promoted before computing at a higher P.
Real promote(const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {} // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r, double i = 0.0) : re(r), im(i) {} // NOLINT

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex promote(const Complex& z);

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Real& s, Complex a);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z); // principal branch
Complex pow(const Complex& base, const Complex& exponent);
Complex pow(const Complex& base, int exponent);
Complex sin(const Complex& z);
Complex polar(const Real& r, const Real& phase);

/// Gamma function and its reciprocal on the complex plane. The reciprocal is
/// entire and is the safe choice near the poles at non-positive integers.
Complex gamma(const Complex& z);
Complex rgamma(const Complex& z);
Complex lgamma(const Complex& z); // branch-unspecified log; exp(lgamma) = gamma

Real to_real(const Rational& q);
Real pi();
Real euler_gamma();
Real digamma(const Real& x);
Real beta(const Real& a, const Real& b);

/// Exact even-index Bernoulli numbers B_0, B_2, ..., B_{2n}.
const std::vector<Rational>& bernoulli_even(std::size_t count);

std::string format(const Real& x, int digits = 17);

} // namespace anharmonic
