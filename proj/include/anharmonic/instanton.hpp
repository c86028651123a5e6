#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/quadrature.hpp"
#include "anharmonic/rspt.hpp"

#include <optional>

namespace anharmonic {

/// Scaled instanton chi(s) = (1 + cosh((m-2) s))^(-1/(m-2)), s = t - t0,
/// solving chi'' = chi - m chi^(m-1) with zero "energy".
Real scaled_profile(int m, const Real& s);
Real scaled_profile_velocity(int m, const Real& s); // analytic d chi / ds
/// U(chi) = chi^m - chi^2 / 2.
Real scaled_potential(int m, const Real& chi);

struct InstantonProfile {
  int m;
  Real t0 = 0;
  int branch = 1; // +1 / -1, even degrees only
};

/// Throws RegimeError unless g < 0 (even) or g > 0 (odd).
void check_instanton_regime(const OscillatorSpec& spec, const Real& g);

/// Coordinate scale of the classical solution: q_cl = amplitude * chi.
/// Even: branch * (-g)^(-1/(N-2)); odd: -g^(-1/(2M-4)).
Real profile_amplitude(const OscillatorSpec& spec, const Real& g, int branch = 1);
Real profile_eval(const InstantonProfile& profile, const Real& t, const Real& g);

/// Expansion variable of the nonperturbative sector:
/// x = (-g)^(2/(N-2)) (even), g^(1/(M-2)) (odd); the action is A(m) / x.
Real instanton_variable(const OscillatorSpec& spec, const Real& g);

/// A(m) = 2^(2/(m-2)) B(m/(m-2), m/(m-2)) at the working precision.
Real action_closed_form(int m);
/// Exact value where the Beta function has integer arguments (m = 3, 4).
std::optional<Rational> action_rational(int m);
/// C(m) = 2^(2/(m-2)).
Real prefactor_constant(int m);

/// Integral of chi'^2/2 + chi^2/2 - chi^m over a window [-T, T] around the
/// origin; T covers |t0| plus the analytic e^(-2|s|) tail. The tail bound is
/// included in the reported error.
QuadResult<Real> action_quadrature(int m, unsigned digits = kDefaultDigits, const Real& t0 = Real(0));
Real action_numeric(int m, unsigned digits = kDefaultDigits, const Real& t0 = Real(0));

struct ActionPair {
  Real closed_form;
  Real numeric;
  Real quadrature_error;
  Real prefactor; // C(m)
};

ActionPair action_pair(int m, unsigned digits = kDefaultDigits);

/// Leading imaginary part of the resonance energy,
///   -(2C/x)^(n+1/2) e^(-A/x) / (n! sqrt(c pi)),  c = 2 (even), 8 (odd).
Real width_leading(const OscillatorSpec& spec, int n, const Real& g);

/// 1 / (n! sqrt(c pi)) with the parity-dependent c above.
Real width_normalization(const OscillatorSpec& spec, int n);

} // namespace anharmonic
