#include "anharmonic/quantize.hpp"

#include "anharmonic/error.hpp"
#include "anharmonic/instanton.hpp"

namespace anharmonic {

namespace mp = boost::multiprecision;

BFunction b_function(const OscillatorSpec& spec, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  Series level = energy_series(rspt_nu_polys(spec, order));
  return {spec, invert_in_symbol(level, Symbol::E)};
}

bool AFixture::leading_discrepancy() const {
  return mp::abs(printed_leading - leading) > mp::abs(leading) * mp::pow(Real(10), -static_cast<int>(working_digits()) / 2);
}

Real AFixture::leading_ratio() const { return printed_leading / leading; }

const std::vector<int>& fixture_degrees() {
  static const std::vector<int> degrees{3, 4, 6, 7};
  return degrees;
}

namespace {

Poly epoly(std::initializer_list<Rational> c) { return Poly(Symbol::E, std::vector<Rational>(c)); }

Real golden_ratio() { return (mp::sqrt(Real(5)) + 1) / 2; }

Real tgamma_frac(int p, int q) { return mp::tgamma(Real(p) / q); }

} // namespace

AFixture a_fixture(int m) {
  OscillatorSpec spec(m);
  const Rational step = spec.lattice_step();
  const Coupling var = spec.instanton_variable();
  AFixture f{m, action_closed_form(m), Real(0), Series(step, 0, var), Real(1), "1", {}};
  switch (m) {
  case 3:
    f.printed_leading = Real(2) / 15;
    f.corrections = Series(step, 2, var);
    f.corrections.set(1, epoly({Rational(77, 32), 0, Rational(141, 8)}));
    f.provenance = {"A_3 leading term 2/(15 g)", "A_3 order g: 77/32 + 141/8 E^2"};
    break;
  case 4:
    // -1/(3g) - g(...) with g < 0, rewritten in -g.
    f.printed_leading = Real(1) / 3;
    f.corrections = Series(step, 2, var);
    f.corrections.set(1, epoly({Rational(67, 48), 0, Rational(17, 4)}));
    f.provenance = {"A_4 leading term -1/(3 g)", "A_4 order g: -(67/48 + 17/4 E^2)"};
    break;
  case 6:
    // Lattice (-g)^(1/2); the (-g)^(1/2) correction vanishes identically.
    f.printed_leading = pi() / mp::pow(Real(2), Real(2.5));
    f.corrections = Series(step, 6, var);
    f.corrections.set(2, epoly({0, Rational(221, 24), 0, Rational(17, 3)}));
    f.corrections.set(4, epoly({0, Rational(2504899, 7680), 0, Rational(45769, 96), 0, Rational(17527, 160)}));
    f.provenance = {"A_6 leading term pi / (2^(5/2) (-g)^(1/2))", "A_6 order g: -(221/24 E + 17/3 E^3)",
                    "A_6 order g^2: 2504899/7680 E + 45769/96 E^3 + 17527/160 E^5"};
    break;
  case 7: {
    const Real phi = golden_ratio(), r5 = mp::pow(Real(5), Real(1) / 4);
    f.printed_leading = r5 * tgamma_frac(1, 5) * tgamma_frac(2, 5) /
                        (mp::pow(Real(2), Real(3) / 5) * 9 * pi() * mp::sqrt(phi));
    f.scale = r5 * mp::pow(tgamma_frac(3, 5), 2) * tgamma_frac(4, 5) / (mp::pow(Real(2), Real(7) / 5) * pi() * mp::sqrt(phi));
    f.scale_expression = "5^(1/4) Gamma(3/5)^2 Gamma(4/5) / (2^(7/5) pi sqrt(phi))";
    f.corrections = Series(step, 2, var);
    f.corrections.set(1, epoly({Rational(5, 8), 0, Rational(9, 10)}));
    f.provenance = {"A_7 leading term (tabulated coefficient differs from A(7) by Gamma(2/5))",
                    "A_7 order g^(1/5): scale * (5/8 + 9/10 E^2)"};
    break;
  }
  default:
    throw FixtureError("no A-function fixture for degree " + std::to_string(m) + "; supported degrees: 3, 4, 6, 7");
  }
  return f;
}

int max_width_order(int m) { return a_fixture(m).corrections.truncation() - 1; }

Real WidthSeries::coefficient(int k) const { return to_real(c.at(k)) * mp::pow(scale, k); }

Real WidthSeries::eval(const Real& g, std::optional<int> upto) const {
  const int top = std::min(upto.value_or(order()), order());
  Real x = instanton_variable(spec, g);
  Real sum = 0, power = 1;
  for (int k = 0; k <= top; ++k) {
    sum += coefficient(k) * power;
    power *= x;
  }
  return width_leading(spec, n, g) * sum;
}

namespace {

Series on_instanton_lattice(const Series& s, const OscillatorSpec& spec) {
  return s.with_variable(spec.instanton_variable()).refined(spec.lattice_step());
}

// Number of lattice points per unit power of g.
int points_per_g(const OscillatorSpec& spec) {
  return static_cast<int>(boost::multiprecision::numerator(Rational(1) / spec.lattice_step()));
}

// Perturbative order in g needed to cover lattice indices below `trunc`.
int g_order_for(const OscillatorSpec& spec, int trunc) {
  const int r = points_per_g(spec);
  return std::max((trunc + r - 1) / r - 1, 0);
}

} // namespace

WidthSeries one_instanton_width_series(const OscillatorSpec& spec, int n, int order) {
  if (n < 0 || order < 0) throw std::invalid_argument("level and order must be non-negative");
  AFixture fixture = a_fixture(spec.m());
  const int maxo = fixture.corrections.truncation() - 1;
  if (order > maxo)
    throw FixtureError("width-series order " + std::to_string(order) + " exceeds the maximum derivable order " +
                       std::to_string(maxo) + " for degree " + std::to_string(spec.m()));
  const int trunc = order + 1;
  const bool scaled = fixture.scale_expression != "1";
  if (scaled && trunc > points_per_g(spec))
    throw FixtureError("scaled A-function corrections cannot be combined with integer powers of g");

  const int kg = g_order_for(spec, trunc);
  Series energy = on_instanton_lattice(energy_series(rspt_coeffs(spec, n, kg)), spec);
  Series b = on_instanton_lattice(b_function(spec, kg).series, spec);

  Series jacobian = substitute(b.symbol_derivative(), energy).truncated(trunc);
  Series shift = substitute(fixture.corrections.truncated(trunc), energy).truncated(trunc);
  Series f = mul(exp_series(Rational(-1) * shift), reciprocal(jacobian)).truncated(trunc);

  WidthSeries w{spec,
                n,
                fixture.leading,
                Rational(2 * n + 1, 2),
                width_normalization(spec, n),
                spec.lattice_step(),
                spec.instanton_variable(),
                {},
                fixture.scale,
                fixture.scale_expression};
  for (int k = 0; k <= order; ++k) w.c.push_back(f.terms().count(k) ? f.scalar(k) : Rational(0));
  return w;
}

Real TransSeriesTerm::value() const {
  return (to_real(rational) + to_real(euler_gamma) * anharmonic::euler_gamma()) * mp::pow(scale, K);
}

TransSeriesTerm trans_series_term(const OscillatorSpec& spec, int n, int J, int L, int K) {
  if (J < 0 || L < 0 || K < 0) throw std::invalid_argument("trans-series indices must be non-negative");
  if (L > std::max(0, J - 1))
    throw std::invalid_argument("logarithm power L=" + std::to_string(L) + " exceeds max(0, J-1)=" +
                                std::to_string(std::max(0, J - 1)));
  TransSeriesTerm t{J, L, K, Rational(0), Rational(0), Real(1)};
  if (J == 0) {
    const int r = points_per_g(spec);
    if (K % r) return t;
    Series e = on_instanton_lattice(energy_series(rspt_coeffs(spec, n, K / r)), spec);
    t.rational = e.scalar(K);
    return t;
  }
  if (J == 1) {
    WidthSeries w = one_instanton_width_series(spec, n, K);
    t.rational = -w.c[K];
    t.scale = w.scale;
    return t;
  }
  if (J == 2) {
    if (K != 0) throw FixtureError("two-instanton coefficients are available at K = 0 only");
    // delta B = eps + eps^2 (ln(-2C/x) - psi(n+1)),  eps = -xi at leading order.
    if (L == 1) {
      t.rational = 1;
    } else {
      Rational harmonic = 0;
      for (int j = 1; j <= n; ++j) harmonic += Rational(1, j);
      t.rational = -harmonic; // -psi(n+1) = gamma_E - H_n
      t.euler_gamma = 1;
    }
    return t;
  }
  throw FixtureError("trans-series terms beyond two instantons are not implemented");
}

std::vector<TransSeriesTerm> two_instanton_terms(const OscillatorSpec& spec, int n) {
  return {trans_series_term(spec, n, 2, 0, 0), trans_series_term(spec, n, 2, 1, 0)};
}

Complex nonperturbative_factor(const OscillatorSpec& spec, int n, const Real& g, int J) {
  // i * |width_leading| is the one-instanton factor xi.
  Real magnitude = -width_leading(spec, n, g);
  Complex xi(Real(0), magnitude);
  return pow(xi, J);
}

Complex eval_b(const BFunction& b, const Complex& energy, const Real& g) {
  Complex sum;
  Real gp = promote(g);
  for (const auto& [k, p] : b.series.terms()) sum += p.eval(energy) * Complex(mp::pow(gp, k));
  return sum;
}

Complex eval_a(const AFixture& a, const Complex& energy, const Real& g) {
  Real x = instanton_variable(OscillatorSpec(a.m), g);
  Complex sum(a.leading / x);
  for (const auto& [k, p] : a.corrections.terms())
    sum += p.eval(energy) * Complex(mp::pow(a.scale * x, k));
  return sum;
}

ResidualResult quantization_residual(const OscillatorSpec& spec, const Complex& energy, const Real& g,
                                     const ResidualOptions& options) {
  PrecisionScope scope(options.digits);
  const Complex e = promote(energy);
  const BFunction b = b_function(spec, options.b_order);
  const AFixture a = a_fixture(spec.m());

  ResidualResult out;
  out.b_value = eval_b(b, e, g);
  if (options.anchor)
    out.b_value = Complex(Real(2 * options.anchor_level + 1) / 2) + out.b_value - eval_b(b, promote(*options.anchor), g);

  const Complex z = Complex(Real(0.5)) - out.b_value;
  const Complex rg = rgamma(z);
  if (abs(rg) < options.pole_tolerance) {
    out.perturbative_root = true;
    return out;
  }
  const Real x = instanton_variable(spec, g);
  const Complex log_base(mp::log(2 * prefactor_constant(spec.m()) / x), pi());
  const Real c = spec.odd() ? Real(8) : Real(2);
  Complex lhs = exp(out.b_value * log_base - eval_a(a, e, g)) / (rg * Complex(mp::sqrt(c * pi())));
  out.residual = lhs - Complex(1.0);
  return out;
}

} // namespace anharmonic
