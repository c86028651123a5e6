#include "anharmonic/error.hpp"
#include "anharmonic/instanton.hpp"

#include <doctest.h>

using namespace anharmonic;
namespace mp = boost::multiprecision;

namespace {
Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }
} // namespace

TEST_CASE("profiles") {
  CHECK(scaled_profile(3, Real(0)) == Real(0.5));
  CHECK(scaled_profile(3, Real(200)) < Real("1e-80"));
  CHECK(mp::abs(mp::abs(profile_eval({3, Real(2)}, Real(2), Real(1))) - Real(0.5)) < Real("1e-38"));
  Real v = profile_eval({4, Real(0), -1}, Real(0), Real(-1));
  CHECK(mp::abs(v + mp::sqrt(Real(0.5))) < Real("1e-38"));
  CHECK_THROWS_AS(profile_eval({3}, Real(0), Real(-1)), RegimeError);
  CHECK_THROWS_AS(profile_eval({4}, Real(0), Real(1)), RegimeError);
  // Coupling scaling: odd amplitude g^(-1/(2M-4)), even (-g)^(-1/(N-2)).
  CHECK(rel(profile_amplitude(OscillatorSpec(3), Real("0.25")), Real(-2)) < Real("1e-38"));
  CHECK(rel(profile_amplitude(OscillatorSpec(6), Real("-0.0625"), 1), Real(2)) < Real("1e-38"));
}

TEST_CASE("Euler-Lagrange residual on a grid") {
  PrecisionScope scope(60);
  const Real h("1e-15");
  for (int m : {3, 4, 5, 7}) {
    for (int i = -8; i <= 8; ++i) {
      Real s = Real(i) / 4;
      Real second = (scaled_profile_velocity(m, s + h) - scaled_profile_velocity(m, s - h)) / (2 * h);
      Real chi = scaled_profile(m, s);
      CHECK(mp::abs(second - (chi - m * mp::pow(chi, m - 1))) < Real("1e-25"));
      Real fd = (scaled_profile(m, s + h) - scaled_profile(m, s - h)) / (2 * h);
      CHECK(mp::abs(fd - scaled_profile_velocity(m, s)) < Real("1e-25"));
    }
  }
}

TEST_CASE("closed-form actions") {
  CHECK(action_rational(3) == Rational(2, 15));
  CHECK(action_rational(4) == Rational(1, 3));
  CHECK_FALSE(action_rational(6).has_value());
  CHECK(rel(action_closed_form(3), Real(2) / 15) < Real("1e-38"));
  CHECK(rel(action_closed_form(6), pi() * mp::pow(Real(2), Real(-2.5))) < Real("1e-38"));
  CHECK(prefactor_constant(3) == 4);
  CHECK(prefactor_constant(4) == 2);
  CHECK(prefactor_constant(6) > 1);
}

TEST_CASE("quadrature matches closed form") {
  for (int m = 3; m <= 10; ++m) {
    auto p = action_pair(m);
    CHECK(rel(p.numeric, p.closed_form) < Real("1e-30"));
  }
}

TEST_CASE("collective coordinate and branch invariance") {
  Real a = action_numeric(5, 30);
  for (const char* t0 : {"-3.5", "0.7", "11"}) CHECK(rel(action_numeric(5, 30, Real(t0)), a) < Real("1e-27"));
  // Both even branches have the same action: the integrand is even in chi.
  Real g("-0.3");
  OscillatorSpec spec(4);
  CHECK(profile_amplitude(spec, g, 1) == -profile_amplitude(spec, g, -1));
}

TEST_CASE("leading widths") {
  OscillatorSpec cubic(3);
  Real g("0.01");
  Real expected = -8 / mp::sqrt(pi()) * mp::pow(g, Real(-1.5)) * mp::exp(-Real(2) / (15 * g));
  CHECK(rel(width_leading(cubic, 1, g), expected) < Real("1e-36"));

  Real gq("-0.05");
  Real quartic = -1 / mp::sqrt(2 * pi()) * mp::sqrt(Real(4) / Real("0.05")) * mp::exp(-1 / (3 * Real("0.05")));
  CHECK(rel(width_leading(OscillatorSpec(4), 0, gq), quartic) < Real("1e-36"));

  CHECK(width_leading(cubic, 0, Real("1e-4")) > Real("-1e-200"));
  CHECK_THROWS_AS(width_leading(cubic, 0, Real(-1)), RegimeError);
  CHECK_THROWS_AS(width_leading(OscillatorSpec(4), 0, Real(1)), RegimeError);

  // Monotone in g and negative.
  Real prev = 0;
  for (int i = 1; i <= 10; ++i) {
    Real w = width_leading(OscillatorSpec(5), 0, Real(i) / 100);
    CHECK(w < 0);
    CHECK(mp::abs(w) > mp::abs(prev));
    prev = w;
  }

  // Log-slope against 1/x recovers the action.
  for (int m : {3, 5, 7}) {
    OscillatorSpec spec(m);
    Real g1("0.01"), g2("0.012");
    Real x1 = instanton_variable(spec, g1), x2 = instanton_variable(spec, g2);
    Real y1 = mp::log(-width_leading(spec, 0, g1)) + Real(0.5) * mp::log(x1);
    Real y2 = mp::log(-width_leading(spec, 0, g2)) + Real(0.5) * mp::log(x2);
    Real slope = (y2 - y1) / (1 / x2 - 1 / x1);
    CHECK(rel(-slope, action_closed_form(m)) < Real("1e-4"));
  }
}
