#include "anharmonic/instanton.hpp"

#include "anharmonic/error.hpp"

namespace anharmonic {

namespace mp = boost::multiprecision;

Real scaled_profile(int m, const Real& s) {
  const int a = m - 2;
  return mp::pow(1 + mp::cosh(a * s), Real(-1) / a);
}

Real scaled_profile_velocity(int m, const Real& s) {
  const int a = m - 2;
  Real c = 1 + mp::cosh(a * s);
  return -mp::sinh(a * s) * mp::pow(c, Real(-1) / a - 1);
}

Real scaled_potential(int m, const Real& chi) { return mp::pow(chi, m) - chi * chi / 2; }

void check_instanton_regime(const OscillatorSpec& spec, const Real& g) {
  if (spec.odd() && !(g > 0))
    throw RegimeError("odd degree " + std::to_string(spec.m()) + ": instanton/resonance regime requires g > 0");
  if (!spec.odd() && !(g < 0))
    throw RegimeError("even degree " + std::to_string(spec.m()) + ": instanton regime requires g < 0");
}

Real profile_amplitude(const OscillatorSpec& spec, const Real& g, int branch) {
  check_instanton_regime(spec, g);
  const int a = spec.m() - 2;
  if (spec.odd()) return -mp::pow(g, Real(-1) / (2 * a));
  if (branch != 1 && branch != -1) throw std::invalid_argument("profile branch must be +1 or -1");
  return branch * mp::pow(-g, Real(-1) / a);
}

Real profile_eval(const InstantonProfile& profile, const Real& t, const Real& g) {
  OscillatorSpec spec(profile.m);
  return profile_amplitude(spec, g, profile.branch) * scaled_profile(profile.m, t - profile.t0);
}

Real instanton_variable(const OscillatorSpec& spec, const Real& g) {
  check_instanton_regime(spec, g);
  Real x = promote(g);
  return spec.odd() ? mp::pow(x, Real(1) / (spec.m() - 2)) : mp::pow(-x, Real(2) / (spec.m() - 2));
}

Real action_closed_form(int m) {
  OscillatorSpec spec(m);
  Real p = Real(m) / (m - 2);
  return mp::pow(Real(2), Real(2) / (m - 2)) * beta(p, p);
}

std::optional<Rational> action_rational(int m) {
  OscillatorSpec spec(m);
  if (2 % (m - 2) != 0) return std::nullopt;
  const int k = m / (m - 2);
  // B(k, k) = ((k-1)!)^2 / (2k-1)!
  Rational b = factorial(k - 1) * factorial(k - 1) / factorial(2 * k - 1);
  return Rational(1 << (2 / (m - 2))) * b;
}

Real prefactor_constant(int m) {
  OscillatorSpec spec(m);
  return mp::pow(Real(2), Real(2) / (m - 2));
}

QuadResult<Real> action_quadrature(int m, unsigned digits, const Real& t0) {
  OscillatorSpec spec(m);
  PrecisionScope scope(digits + 10);
  const Real tol = mp::pow(Real(10), -static_cast<int>(digits));
  const Real shift = promote(t0);
  // Far tails: integrand ~ 2^(2/(m-2)) e^(-2|s|); both tails together integrate
  // to 2^(2/(m-2)) e^(-2 T_s) at a distance T_s from the centre.
  const Real c2 = mp::pow(Real(2), Real(2) / (m - 2));
  const Real reach = (mp::log(c2 / tol) + mp::log(Real(1000))) / 2;
  const Real window = mp::abs(shift) + reach;
  auto integrand = [&](const Real& t) {
    Real s = t - shift;
    Real chi = scaled_profile(m, s);
    Real v = scaled_profile_velocity(m, s);
    return v * v / 2 + chi * chi / 2 - mp::pow(chi, m);
  };
  // Split at the peak: the complex poles of the profile sit above and below it.
  auto left = tanh_sinh(integrand, -window, shift, tol / 10, 16);
  auto right = tanh_sinh(integrand, shift, window, tol / 10, 16);
  Real s_left = window + shift, s_right = window - shift;
  Real tail = c2 * (mp::exp(-2 * s_left) + mp::exp(-2 * s_right)) / 2;
  QuadResult<Real> out{left.value + right.value, left.error + right.error + tail,
                       left.evaluations + right.evaluations, std::max(left.levels, right.levels)};
  if (out.error > tol * mp::abs(out.value))
    throw ConvergenceError("action quadrature for m=" + std::to_string(m) + " reached only " +
                           format(out.error / mp::abs(out.value), 3) + " relative error");
  return out;
}

Real action_numeric(int m, unsigned digits, const Real& t0) {
  Real v = action_quadrature(m, digits, t0).value;
  return Real(v, digits);
}

ActionPair action_pair(int m, unsigned digits) {
  PrecisionScope scope(digits);
  auto q = action_quadrature(m, digits);
  return {action_closed_form(m), Real(q.value, digits), Real(q.error, digits), prefactor_constant(m)};
}

Real width_normalization(const OscillatorSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  Real c = spec.odd() ? Real(8) : Real(2);
  return 1 / (to_real(factorial(n)) * mp::sqrt(c * pi()));
}

Real width_leading(const OscillatorSpec& spec, int n, const Real& g) {
  Real x = instanton_variable(spec, g);
  const int m = spec.m();
  Real base = 2 * prefactor_constant(m) / x;
  return -width_normalization(spec, n) * mp::pow(base, Real(n) + Real(0.5)) * mp::exp(-action_closed_form(m) / x);
}

} // namespace anharmonic
