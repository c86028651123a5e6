#include "anharmonic/error.hpp"
#include "anharmonic/instanton.hpp"
#include "anharmonic/quantize.hpp"

#include <doctest.h>

using namespace anharmonic;
namespace mp = boost::multiprecision;

namespace {
Poly e(std::initializer_list<Rational> c) { return Poly(Symbol::E, std::vector<Rational>(c)); }
} // namespace

TEST_CASE("B function low orders") {
  auto b3 = b_function(OscillatorSpec(3), 1).series;
  CHECK(b3.coeff(0) == e({0, 1}));
  CHECK(b3.coeff(1) == e({Rational(7, 16), 0, Rational(15, 4)}));
  CHECK(b_function(OscillatorSpec(4), 1).series.coeff(1) == e({Rational(-3, 8), 0, Rational(-3, 2)}));
  CHECK(b_function(OscillatorSpec(6), 1).series.coeff(1) == e({0, Rational(-25, 8), 0, Rational(-5, 2)}));
  CHECK(b_function(OscillatorSpec(7), 1).series.coeff(1) ==
        e({Rational(180675, 2048), 0, Rational(444381, 512), 0, Rational(82005, 128), 0, Rational(3003, 32)}));
}

TEST_CASE("on-shell identity") {
  for (int m : {3, 4, 5, 6, 7}) {
    OscillatorSpec spec(m);
    const int order = m == 7 ? 3 : 5;
    auto b = b_function(spec, order).series;
    for (int n = 0; n <= 4; ++n) {
      auto en = energy_series(rspt_coeffs(spec, n, order));
      auto on = substitute(b, en);
      CHECK(on == Series::scalars(1, order + 1, {{0, Rational(2 * n + 1, 2)}}));
    }
  }
}

TEST_CASE("A fixtures") {
  auto a3 = a_fixture(3);
  CHECK(a3.corrections.coeff(1) == e({Rational(77, 32), 0, Rational(141, 8)}));
  CHECK_FALSE(a3.leading_discrepancy());
  auto a6 = a_fixture(6);
  CHECK(a6.corrections.step() == Rational(1, 2));
  CHECK(a6.corrections.coeff(1).is_zero());
  CHECK(a6.corrections.coeff(2) == e({0, Rational(221, 24), 0, Rational(17, 3)}));
  auto a7 = a_fixture(7);
  CHECK(a7.leading_discrepancy());
  CHECK(mp::abs(a7.leading_ratio() * mp::tgamma(Real(2) / 5) - 1) < Real("1e-35"));
  CHECK_THROWS_AS(a_fixture(5), FixtureError);
  for (int m : fixture_degrees()) CHECK(a_fixture(m).provenance.size() == a_fixture(m).corrections.terms().size() + 1);
}

TEST_CASE("one-instanton width series") {
  auto w = one_instanton_width_series(OscillatorSpec(3), 1, 1);
  CHECK(w.c[0] == 1);
  CHECK(w.c[1] == Rational(-853, 16));
  CHECK(one_instanton_width_series(OscillatorSpec(4), 0, 1).c[1] == Rational(-95, 24));
  CHECK(one_instanton_width_series(OscillatorSpec(3), 0, 1).c[1] == Rational(-169, 16));
  auto w6 = one_instanton_width_series(OscillatorSpec(6), 0, 5);
  CHECK(w6.c[1] == 0);
  CHECK(w6.c[3] == 0);
  auto w7 = one_instanton_width_series(OscillatorSpec(7), 0, 1);
  CHECK(w7.c[1] == Rational(-17, 20));
  CHECK_THROWS_AS(one_instanton_width_series(OscillatorSpec(3), 1, 2), FixtureError);
  CHECK(max_width_order(6) == 5);

  Real g("0.02");
  auto w0 = one_instanton_width_series(OscillatorSpec(3), 1, 0);
  CHECK(w0.eval(g) == width_leading(OscillatorSpec(3), 1, g));
  CHECK(w0.prefactor_power == Rational(3, 2));
  CHECK(mp::abs(w0.prefactor_constant * mp::sqrt(8 * pi()) - 1) < Real("1e-38"));
}

TEST_CASE("trans-series structure") {
  OscillatorSpec quartic(4);
  auto table = rspt_coeffs(quartic, 0, 10);
  for (int k = 0; k <= 10; ++k)
    CHECK(trans_series_term(quartic, 0, 0, 0, k).rational == (k % 2 ? -table.coeffs[k] : table.coeffs[k]));
  OscillatorSpec sextic(6);
  CHECK(trans_series_term(sextic, 0, 0, 0, 1).rational == 0);
  CHECK(trans_series_term(sextic, 0, 0, 0, 2).rational == -Rational(15, 8));

  OscillatorSpec cubic(3);
  auto two = two_instanton_terms(cubic, 0);
  CHECK(two[1].L == 1);
  CHECK(two[1].rational != 0);
  CHECK(two[0].euler_gamma == 1);
  CHECK_THROWS_AS(trans_series_term(cubic, 0, 2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(trans_series_term(cubic, 0, 1, 1, 0), std::invalid_argument);
  CHECK(trans_series_term(cubic, 0, 1, 0, 0).rational == -1);

  // xi^2 carries exactly twice the exponent of xi.
  Real g("-0.05");
  Complex x1 = nonperturbative_factor(quartic, 0, g, 1), x2 = nonperturbative_factor(quartic, 0, g, 2);
  CHECK(abs(x2 - x1 * x1) < Real("1e-38") * abs(x2));
  CHECK(x1.re == 0);
}

TEST_CASE("quantization residual near the perturbative pole") {
  OscillatorSpec cubic(3);
  Real g("0.05");
  Real prev = 0;
  for (const char* eps : {"1e-3", "1e-6", "1e-9"}) {
    ResidualOptions bare;
    bare.b_order = 0;
    auto r = quantization_residual(cubic, Complex(Real(0.5) + Real(eps)), g, bare);
    CHECK_FALSE(r.perturbative_root);
    if (prev != 0) CHECK(abs(r.residual) > 100 * prev);
    prev = abs(r.residual);
  }
  // Exactly on a perturbative root of the truncated B.
  ResidualOptions opt;
  opt.b_order = 0;
  auto root = quantization_residual(cubic, Complex(Real(0.5)), g, opt);
  CHECK(root.perturbative_root);
}
