#include "anharmonic/error.hpp"
#include "anharmonic/series.hpp"

#include <doctest.h>

#include <random>

using namespace anharmonic;

namespace {

Series random_series(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> d(-5, 5);
  Series s(Rational(1), trunc);
  for (int k = 0; k < trunc; ++k) s.set(k, Rational(d(rng), 1 + std::abs(d(rng))));
  return s;
}

} // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(Rational(BigInt(6), BigInt(-4))) == "-3/2");
  CHECK(parse_rational("-12/8") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("poly basics") {
  Poly p(Symbol::E, {Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK_FALSE(Poly().degree().has_value());
  Poly x = Poly::monomial(1, 1);
  CHECK((x + Poly::constant(1)) * (x - Poly::constant(1)) == Poly(Symbol::E, {-1, 0, 1}));
  CHECK_THROWS(x + Poly::monomial(1, 1, Symbol::Nu));
  std::vector<Rational> xs{0, 1, 2, 3}, ys;
  for (auto& t : xs) ys.push_back(t * t * t - 2 * t);
  CHECK(Poly::interpolate(xs, ys, Symbol::Nu) == Poly(Symbol::Nu, {0, -2, 0, 1}));
}

TEST_CASE("series arithmetic") {
  auto a = Series::scalars(1, 3, {{0, 1}, {1, 1}});
  auto b = Series::scalars(1, 3, {{0, 1}, {1, -1}});
  auto p = a * b;
  CHECK(p.truncation() == 3);
  CHECK(p == Series::scalars(1, 3, {{0, 1}, {2, -1}}));

  auto c = Series::scalars(1, 4, {{0, 1}});
  auto d = Series::scalars(1, 2, {{0, 1}});
  CHECK((c * d).truncation() == 2);
  CHECK((c + d).truncation() == 2);

  auto laurent = Series::scalars(1, 2, {{-1, Rational(2, 15)}}) + Series::scalars(1, 2, {{1, Rational(77, 32)}});
  CHECK(laurent.valuation() == -1);
  CHECK(laurent.scalar(1) == Rational(77, 32));
  CHECK_THROWS_AS(laurent.coeff(2), std::out_of_range);

  auto half = Series::scalars(Rational(1, 2), 4, {{1, 1}});
  CHECK_THROWS_AS(half + a, LatticeMismatch);
  CHECK_THROWS_AS(a + a.with_variable(Coupling::MinusG), LatticeMismatch);
  CHECK(a.refined(Rational(1, 2)).scalar(2) == 1);
  CHECK(a.with_variable(Coupling::MinusG).scalar(1) == -1);
}

TEST_CASE("composition") {
  auto cg = Series::scalars(1, 3, {{1, 5}});
  auto e = exp_series(cg);
  CHECK(e == Series::scalars(1, 3, {{0, 1}, {1, 5}, {2, Rational(25, 2)}}));

  Series geom(Rational(1), 3);
  for (int j = 0; j < 3; ++j) geom.set(j, Rational(j % 2 ? -1 : 1));
  auto inner = Series::scalars(1, Series::kUnbounded, {{1, 1}, {2, 1}});
  auto r = compose(geom, inner);
  CHECK(r.truncation() == 3);
  CHECK(r.scalar(0) == 1);
  CHECK(r.scalar(1) == -1);
  CHECK(r.scalar(2) == 0);

  auto with_const = Series::scalars(1, 3, {{0, 1}, {1, 1}});
  CHECK_THROWS_AS(compose(geom, with_const), Error);

  // Polynomial outer with constant inner term goes through substitute().
  Series b(Rational(1), 2);
  b.set(0, Poly::monomial(1, 1));
  b.set(1, Poly(Symbol::E, {Rational(-3, 8), 0, Rational(-3, 2)}));
  Series en(Rational(1), 2, Coupling::G, Symbol::E);
  en.set(0, Rational(1, 2));
  en.set(1, Rational(3, 4));
  auto onshell = substitute(b, en);
  CHECK(onshell == Series::scalars(1, 2, {{0, Rational(1, 2)}}));
}

TEST_CASE("reversion") {
  Rational a(3, 7);
  auto s = Series::scalars(1, 5, {{1, 1}, {2, a}});
  auto r = reverse(s);
  CHECK(r.scalar(1) == 1);
  CHECK(r.scalar(2) == -a);
  CHECK(r.scalar(3) == 2 * a * a);
  CHECK(r.scalar(4) == -5 * a * a * a);
  CHECK_THROWS_AS(reverse(Series::scalars(1, 4, {{2, 1}})), Error);
}

TEST_CASE("ring axioms and reversion round trip on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);

    auto s = random_series(rng, 7);
    s.set(0, Rational(0));
    s.set(1, Rational(trial + 1, 3));
    auto r = reverse(s);
    auto id = Series::scalars(1, 7, {{1, 1}});
    CHECK(compose(s, r) == id);
    CHECK(compose(r, s) == id);
  }
}

TEST_CASE("numeric evaluation") {
  auto half = Series::scalars(1, 1, {{0, Rational(1, 2)}});
  CHECK(eval_numeric(half, Real(7)).value.re == Real(0.5));

  auto head = Series::scalars(1, 1, {{-1, Rational(2, 15)}});
  Real v = eval_numeric(head, Real("0.01")).value.re;
  CHECK(abs(Complex(v - Real(40) / 3)) < Real("1e-35"));

  auto quartic = Series::scalars(1, 3, {{0, Rational(1, 2)}, {1, Rational(3, 4)}, {2, Rational(-21, 8)}});
  auto q = eval_numeric(quartic, Real("0.1"));
  CHECK(abs(Complex(q.value.re - Real("0.54875"))) < Real("1e-35"));
  CHECK(abs(Complex(q.last_term - Real("0.02625"))) < Real("1e-35"));

  auto frac = Series::scalars(Rational(1, 3), 3, {{1, 1}});
  CHECK_THROWS_AS(eval_numeric(frac, Real(-1)), Error);
  EvalOptions opt;
  opt.principal_branch = true;
  auto z = eval_numeric(frac, Real(-1), opt).value;
  CHECK(abs(z - polar(Real(1), pi() / 3)) < Real("1e-35"));
}

TEST_CASE("precision agreement") {
  auto s = Series::scalars(Rational(1, 5), 12, {{0, 1}, {1, Rational(-17, 20)}, {3, Rational(11, 7)}, {7, 3}});
  Real g("0.0137");
  EvalOptions lo, hi;
  lo.digits = 40;
  hi.digits = 80;
  PrecisionScope scope(80);
  Real g80("0.0137");
  Complex a = eval_numeric(s, g80, lo).value;
  Complex b = eval_numeric(s, g80, hi).value;
  CHECK(abs(a - b) / abs(b) < Real("1e-35"));
}

TEST_CASE("json round trip is exact") {
  Series s(Rational(2, 5), 9, Coupling::MinusG, Symbol::Nu);
  s.set(-1, Rational(-2, 15));
  s.set(3, Poly(Symbol::Nu, {Rational(180675, 2048), 0, Rational(444381, 512)}));
  auto j = to_json(s);
  CHECK(j["lattice_step"] == "2/5");
  auto back = series_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == s);
  CHECK(to_json(back).dump() == j.dump());
}
