#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/rspt.hpp"
#include "anharmonic/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anharmonic {

/// Perturbative function: B(E, g) = E + sum_K b_K(E) g^K, obtained by
/// inverting the level map E(nu, g) in its first argument.
struct BFunction {
  OscillatorSpec spec;
  Series series; // integer lattice in g, coefficients polynomial in E
  int order() const { return series.truncation() - 1; }
};

BFunction b_function(const OscillatorSpec& spec, int order);

/// Tabulated instanton function
///   A(E, g) = A(m) / x + sum_{k >= 1} scale^k a_k(E) x^k
/// on the nonperturbative lattice x = g^(1/(M-2)) or (-g)^(2/(N-2)).
struct AFixture {
  int m;
  Real leading;                // A(m) from the closed form (authoritative)
  Real printed_leading;        // leading coefficient as tabulated
  Series corrections;          // k >= 1 terms, variable/step of the oscillator
  Real scale;                  // irrational common factor of the corrections
  std::string scale_expression;
  std::vector<std::string> provenance; // one entry per tabulated term

  /// True when the tabulated leading coefficient differs from A(m).
  bool leading_discrepancy() const;
  /// printed_leading / leading.
  Real leading_ratio() const;
};

const std::vector<int>& fixture_degrees(); // {3, 4, 6, 7}
AFixture a_fixture(int m);                  // FixtureError outside the tabulated degrees

/// Imaginary part of the resonance energy at one-instanton order,
///   Im E = width_leading(g) * sum_k c_k scale^k x^k,  c_0 = 1.
struct WidthSeries {
  OscillatorSpec spec;
  int n;
  Real action;
  Rational prefactor_power;   // n + 1/2
  Real prefactor_constant;    // 1/(n! sqrt(2 pi)) even, 1/(2 n! sqrt(2 pi)) odd
  Rational lattice_step;
  Coupling variable;
  std::vector<Rational> c;    // exact, c[0] = 1
  Real scale;
  std::string scale_expression;

  int order() const { return static_cast<int>(c.size()) - 1; }
  Real coefficient(int k) const; // c_k scale^k
  /// Width at coupling g including corrections through `order` (default: all).
  Real eval(const Real& g, std::optional<int> order = std::nullopt) const;
};

/// Largest correction index derivable from the tabulated A function.
int max_width_order(int m);

/// Expands the quantization condition around the pole of Gamma(1/2 - B) on
/// the perturbative branch: c_k are the coefficients of
///   exp(-(A - A(m)/x)) / (dB/dE),  both evaluated at E = E_n(g).
WidthSeries one_instanton_width_series(const OscillatorSpec& spec, int n, int order);

/// Coefficient Xi_{J,L,K} of xi^J ln^L(-2C/x) x^K, with
/// xi = i (2C/x)^(n+1/2) e^(-A(m)/x) / (n! sqrt(c pi)).
/// Exact value rational + euler_gamma * gamma_E, times scale^K.
struct TransSeriesTerm {
  int J, L, K;
  Rational rational;
  Rational euler_gamma;
  Real scale;

  Real value() const;
};

/// Rejects L > max(0, J-1); supports J <= 2 (K = 0 only at J = 2).
TransSeriesTerm trans_series_term(const OscillatorSpec& spec, int n, int J, int L, int K);
std::vector<TransSeriesTerm> two_instanton_terms(const OscillatorSpec& spec, int n);

/// xi^J at coupling g (complex: xi is purely imaginary).
Complex nonperturbative_factor(const OscillatorSpec& spec, int n, const Real& g, int J = 1);

struct ResidualOptions {
  int b_order = 2;
  unsigned digits = kDefaultDigits;
  /// Anchored mode: B is replaced by n + 1/2 + B(E) - B(anchor), which removes
  /// the truncation error of the perturbative function at the reference energy.
  std::optional<Complex> anchor;
  int anchor_level = 0;
  Real pole_tolerance = Real("1e-30");
};

struct ResidualResult {
  Complex residual;   // LHS - 1
  Complex b_value;    // B used in the condition
  bool perturbative_root = false;
};

/// Left-hand side of the generalized quantization condition minus one,
///   Gamma(1/2 - B) (-2C/x)^B e^(-A) / sqrt(c pi) - 1,
/// with ln(-2C/x) = ln(2C/x) + i pi.
ResidualResult quantization_residual(const OscillatorSpec& spec, const Complex& energy, const Real& g,
                                     const ResidualOptions& options = {});

Complex eval_b(const BFunction& b, const Complex& energy, const Real& g);
Complex eval_a(const AFixture& a, const Complex& energy, const Real& g);

} // namespace anharmonic
