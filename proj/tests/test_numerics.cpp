#include "anharmonic/borel.hpp"
#include "anharmonic/hamiltonian.hpp"
#include "anharmonic/instanton.hpp"

#include <doctest.h>

#include <random>

using namespace anharmonic;
namespace mp = boost::multiprecision;

TEST_CASE("banded LU solves complex banded systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  BandedMatrix a(30, 3, 2);
  for (int i = 0; i < 30; ++i)
    for (int j = std::max(0, i - 3); j <= std::min(29, i + 2); ++j) a.at(i, j) = Complex(Real(d(rng)), Real(d(rng)));
  std::vector<Complex> x(30);
  for (auto& v : x) v = Complex(Real(d(rng)), Real(d(rng)));
  auto b = a.multiply(x);
  BandedLU lu(a);
  REQUIRE_FALSE(lu.singular());
  auto y = lu.solve(b);
  for (int i = 0; i < 30; ++i) CHECK(abs(y[i] - x[i]) < Real("1e-30"));
}

TEST_CASE("scaled Hamiltonian structure") {
  CHECK(build_hamiltonian(OscillatorSpec(3), Real("0.01"), Real("0.2"), 32).bandwidth() == 3);
  CHECK(build_hamiltonian(OscillatorSpec(4), Real("0.01"), Real("0.2"), 32).bandwidth() == 4);
  CHECK(build_hamiltonian(OscillatorSpec(7), Real("0.01"), Real("0.1"), 32).bandwidth() == 7);

  auto h = build_hamiltonian(OscillatorSpec(6), Real("0.3"), Real(0), 40);
  for (int i = 0; i < 40; ++i) {
    for (int j = std::max(0, i - 6); j <= std::min(39, i + 6); ++j) {
      CHECK(h.matrix.get(i, j).im == 0);
      CHECK(h.matrix.get(i, j).re == h.matrix.get(j, i).re);
    }
  }
  CHECK(h.matrix.get(0, 6).re > 0);

  CHECK_THROWS_AS(build_hamiltonian(OscillatorSpec(3), Real("0.01"), pi() / 5, 32), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(OscillatorSpec(3), Real("0.01"), Real("-0.1"), 32), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(OscillatorSpec(3), Real("0.01"), Real("0.1"), 15), std::invalid_argument);
}

TEST_CASE("harmonic limit") {
  for (const char* theta : {"0", "0.2"}) {
    auto h = build_hamiltonian(OscillatorSpec(4), Real(0), Real(theta), 80);
    for (int n = 0; n < 4; ++n) {
      auto e = nearest_eigenvalue(h.matrix, Complex(Real(n) + Real("0.45")), n);
      CHECK(abs(e.value - Complex(Real(2 * n + 1) / 2)) < Real("1e-12"));
    }
  }
  auto r = resonance(OscillatorSpec(3), 2, Real(0));
  CHECK(r.energy.re == Real(5) / 2);
  CHECK(r.energy.im == 0);
}

TEST_CASE("quartic resonance against the leading width") {
  OscillatorSpec q(4);
  auto r = resonance(q, 0, Real("-0.05"));
  Real lead = width_leading(q, 0, Real("-0.05"));
  CHECK(r.energy.im < 0);
  // Leading order alone is 26% off here; the first correction 1 - 95/24 |g| closes most of the gap.
  CHECK(mp::abs(r.energy.im / lead - 1) < Real("0.3"));
  CHECK(mp::abs(r.energy.im / (lead * (1 - Real(95) / 24 * Real("0.05"))) - 1) < Real("0.1"));
  CHECK(r.error < mp::abs(r.energy.im) * Real("1e-6"));
}

TEST_CASE("resonance plateau failure carries the table") {
  ResonanceOptions opt;
  opt.dims = {16};
  opt.thetas = {Real("0.1"), Real("0.2")};
  try {
    resonance(OscillatorSpec(3), 0, Real("0.05"), opt);
    FAIL("expected NoPlateau");
  } catch (const NoPlateau& e) {
    CHECK(e.table().size() == 2);
  }
}

TEST_CASE("Pade and polynomial roots") {
  std::vector<Rational> geo(6, Rational(1));
  auto p = pade(geo, 0, 1);
  REQUIRE(p.q.size() == 2);
  CHECK(p.q[1] == -1);
  CHECK(p.p[0] == 1);

  auto roots = polynomial_roots({Real(-6), Real(-7), Real(0), Real(1)}); // (t-3)(t+1)(t+2)
  std::vector<Real> re;
  for (auto& z : roots) {
    CHECK(mp::abs(z.im) < Real("1e-30"));
    re.push_back(z.re);
  }
  std::sort(re.begin(), re.end());
  CHECK(mp::abs(re[0] + 2) < Real("1e-30"));
  CHECK(mp::abs(re[1] + 1) < Real("1e-30"));
  CHECK(mp::abs(re[2] - 3) < Real("1e-30"));
}

TEST_CASE("Borel-Pade sums") {
  std::vector<Rational> geo;
  for (int k = 0; k < 30; ++k) geo.push_back(Rational(k % 2 ? -1 : 1));
  auto s = borel_pade(geo, 1, Real("0.3"));
  CHECK(abs(s.value - Complex(Real(10) / 13)) < Real("1e-24"));
  CHECK_FALSE(s.deflected);
  CHECK_THROWS_AS(borel_pade(std::vector<Rational>(11, Rational(1)), 1, Real("0.1")), std::invalid_argument);

  OscillatorSpec q(4);
  auto quartic = borel_pade(rspt_coeffs(q, 0, 40).coeffs, 1, Real("0.02"));
  CHECK(mp::abs(quartic.value.im) <= quartic.error + Real("1e-30"));
  auto r = resonance(q, 0, Real("0.02"));
  CHECK(mp::abs(quartic.value.re - r.energy.re) < Real("1e-6"));
}

TEST_CASE("lateral Borel sums carry the cubic width") {
  OscillatorSpec c(3);
  const Real g("0.004");
  auto table = rspt_coeffs(c, 0, 40);
  auto up = borel_pade(table.coeffs, 1, g, pi() / 4);
  auto down = borel_pade(table.coeffs, 1, g, -pi() / 4);
  CHECK(abs(up.value - conj(down.value)) < Real("1e-25"));
  // The discontinuity across the real ray is twice the resonance width.
  auto r = resonance(c, 0, g);
  CHECK(mp::abs(up.value.im / r.energy.im - 1) < Real("0.1"));
  CHECK(mp::abs(up.value.im / width_leading(c, 0, g) - 1) < Real("0.1"));
  // A pole on the real ray forces a deflection.
  auto real_ray = borel_pade(table.coeffs, 1, g, Real(0));
  CHECK(real_ray.deflected);
  CHECK(real_ray.ray != 0);
}
