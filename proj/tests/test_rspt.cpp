#include "anharmonic/error.hpp"
#include "anharmonic/rspt.hpp"

#include <doctest.h>

using namespace anharmonic;

TEST_CASE("low-order perturbation coefficients") {
  auto q = rspt_coeffs(OscillatorSpec(4), 0, 3);
  CHECK(q.coeffs[0] == Rational(1, 2));
  CHECK(q.coeffs[1] == Rational(3, 4));
  CHECK(q.coeffs[2] == Rational(-21, 8));
  CHECK(q.coeffs[3] == Rational(333, 16));

  CHECK(rspt_coeffs(OscillatorSpec(6), 0, 1).coeffs[1] == Rational(15, 8));
  auto c0 = rspt_coeffs(OscillatorSpec(3), 0, 2);
  CHECK(c0.coeffs[1] == Rational(-11, 8));
  CHECK(c0.coeffs[2] == Rational(-465, 32));
  CHECK(rspt_coeffs(OscillatorSpec(3), 1, 1).coeffs[1] == Rational(-71, 8));
  CHECK(rspt_coeffs(OscillatorSpec(5), 2, 0).coeffs[0] == Rational(5, 2));
  CHECK_THROWS_AS(OscillatorSpec(2), std::invalid_argument);
}

TEST_CASE("first-order shift equals the harmonic expectation value") {
  // <n|q^4|n> = (6n^2 + 6n + 3)/4
  for (int n = 0; n < 6; ++n)
    CHECK(rspt_coeffs(OscillatorSpec(4), n, 1).coeffs[1] == Rational(6 * n * n + 6 * n + 3, 4));
}

TEST_CASE("even oscillators alternate in sign") {
  for (int m : {4, 6, 8}) {
    auto t = rspt_coeffs(OscillatorSpec(m), 0, 16);
    for (int k = 1; k <= 16; ++k) CHECK((t.coeffs[k] > 0) == (k % 2 == 1));
  }
}

TEST_CASE("nu polynomials reproduce the level tables") {
  for (int m : {3, 4, 6}) {
    OscillatorSpec spec(m);
    const int kmax = m == 6 ? 6 : 10;
    auto nu = rspt_nu_polys(spec, kmax);
    CHECK(nu.polys[0] == Poly::monomial(1, 1, Symbol::Nu));
    for (int k = 1; k <= kmax; ++k) CHECK(nu.polys[k].degree() == nu_degree_bound(spec, k));
    for (int n = 0; n <= 6; ++n) {
      auto t = rspt_coeffs(spec, n, kmax);
      for (int k = 0; k <= kmax; ++k) CHECK(nu.polys[k].eval(Rational(2 * n + 1, 2)) == t.coeffs[k]);
    }
  }
  auto sextic = rspt_nu_polys(OscillatorSpec(6), 1);
  CHECK(sextic.polys[1].eval(Rational(1, 2)) == Rational(15, 8));
}

TEST_CASE("factorial growth of the quartic ground state") {
  // log|c_K| - lgamma(K + 1/2) - K log 3 tends to a constant.
  auto t = rspt_coeffs(OscillatorSpec(4), 0, 40);
  auto excess = [&](int k) {
    Real c = boost::multiprecision::abs(to_real(t.coeffs[k]));
    return boost::multiprecision::log(c) - boost::multiprecision::lgamma(Real(k) + Real(0.5)) -
           k * boost::multiprecision::log(Real(3));
  };
  Real d1 = excess(39) - excess(38), d2 = excess(40) - excess(39);
  CHECK(boost::multiprecision::abs(d1) < Real(0.1));
  CHECK(boost::multiprecision::abs(d2) < boost::multiprecision::abs(d1));
}

TEST_CASE("table serialization") {
  auto t = rspt_coeffs(OscillatorSpec(3), 1, 4);
  auto back = coeff_table_from_json(nlohmann::json::parse(to_json(t).dump()));
  CHECK(back.coeffs == t.coeffs);
  CHECK(to_csv(t).rfind("K,numerator,denominator\n0,3,2\n1,-71,8\n", 0) == 0);
}
