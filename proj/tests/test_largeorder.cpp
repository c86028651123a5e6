#include "anharmonic/instanton.hpp"
#include "anharmonic/largeorder.hpp"

#include <doctest.h>

using namespace anharmonic;
namespace mp = boost::multiprecision;

namespace {
Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }
} // namespace

TEST_CASE("closed forms of the leading growth") {
  for (int K : {1, 5, 17}) {
    Real quartic = (K % 2 ? 1 : -1) * mp::sqrt(Real(6)) * mp::pow(pi(), Real(-1.5)) * mp::tgamma(Real(K) + Real(0.5)) *
                   mp::pow(Real(3), K);
    CHECK(rel(leading_even(4, 0, K), quartic) < Real("1e-35"));
    Real cubic = -mp::tgamma(Real(K) + Real(0.5)) * mp::pow(Real(30), Real(K) + Real(0.5)) /
                 (mp::pow(pi(), Real(1.5)) * mp::pow(Real(2), 2 * K + 1));
    CHECK(rel(leading_odd(3, 0, K), cubic) < Real("1e-35"));
    CHECK(leading_odd(3, 0, K) < 0);
  }
  // Seventh degree: per-K growth base b with b^5 / 4 = A(7)^(-5).
  const Real phi = (mp::sqrt(Real(5)) + 1) / 2;
  Real b = 18 * pi() * mp::sqrt(phi) /
           (mp::pow(Real(5), Real(1) / 4) * mp::tgamma(Real(1) / 5) * mp::pow(mp::tgamma(Real(2) / 5), 2));
  CHECK(rel(mp::pow(b, 5) / 4, mp::pow(action_closed_form(7), -5)) < Real("1e-35"));
  for (int K : {3, 11}) {
    Real lo7 = -5 * mp::tgamma(Real(5 * K) + Real(0.5)) / (mp::pow(Real(2), 2 * K + 1) * mp::pow(pi(), Real(1.5))) *
               mp::pow(b, Real(5 * K) + Real(0.5));
    CHECK(rel(leading_odd(7, 0, K), lo7) < Real("1e-35"));
  }
  CHECK_THROWS_AS(leading_even(5, 0, 3), std::invalid_argument);
}

TEST_CASE("width brace") {
  auto w = one_instanton_width_series(OscillatorSpec(3), 1, 1);
  CHECK(width_brace(w, 7, 0) == 1);
  CHECK(subleading_from_width(w, 7, 0) == leading_odd(3, 1, 7));
  // 1 + c1 A Gamma(K + 1/2) / Gamma(K + 3/2) for rho = 1.
  Real expect = 1 + Real(-853) / 16 * Real(2) / 15 / (Real(9) + Real(0.5));
  CHECK(rel(width_brace(w, 9, 1), expect) < Real("1e-35"));
  CHECK_THROWS_AS(width_brace(w, 9, 2), std::invalid_argument);
  Real a = inverse_k_constant(w);
  Real big = 100000;
  CHECK(mp::abs(big * (width_brace(w, 100000, 1) - 1) - a) < Real("1e-3"));
}

TEST_CASE("dispersion moments reproduce the closed forms") {
  for (int K : {5, 10, 20}) {
    for (int m : {3, 4, 6, 7}) {
      OscillatorSpec spec(m);
      auto q = dispersion_moment(spec, 1, K);
      CHECK(rel(q.value, mp::abs(leading_coefficient(spec, 1, K))) < Real("1e-25"));
    }
  }
  CHECK(dispersion_moment(OscillatorSpec(4), 0, 1).value > 0);
}

TEST_CASE("ratio diagnostics") {
  OscillatorSpec spec(4);
  auto table = rspt_coeffs(spec, 0, 40);
  auto d = ratio_diagnostics(table, [&](int K) { return leading_coefficient(spec, 0, K); });
  CHECK(d.points.size() == 40);
  CHECK(d.fit.k_lo == 20);
  for (int k = 30; k <= 40; ++k) CHECK(mp::abs(d.points[k - 1].ratio - 1) < Real(0.05));
  // Known quartic ground-state correction: ratio = 1 - 95/72 / K + O(1/K^2).
  CHECK(mp::abs(d.fit.a + Real(95) / 72) < Real(0.1));
  CHECK_THROWS_AS(ratio_diagnostics(rspt_coeffs(spec, 0, 5), [](int) { return Real(1); }), std::invalid_argument);
}
