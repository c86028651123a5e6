#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/rational.hpp"

#include <optional>
#include <vector>

namespace anharmonic {

/// Directional Borel-Pade sum of sum_K c_K g^K.
/// Borel transform b_K = c_K / Gamma(beta K + 1); Laplace integral
///   f(g) = int_0^inf e^{-s} B(g s^beta) ds
/// taken along the ray on which arg(g s^beta) = direction.
struct BorelSum {
  int coefficients;
  int beta;
  Real direction;   // requested argument of the Borel variable
  Real ray;         // argument actually used (after deflection)
  bool deflected;
  int pade_l, pade_m;
  std::vector<Complex> poles; // Pade poles in the Borel variable
  Complex value;
  Real error;       // spread against Pade approximants built from fewer coefficients
  unsigned digits;
};

/// Angle by which the ray is moved off a Pade pole.
inline constexpr double kRayDeflection = 0.05;
/// Poles closer than this (in argument) to the ray trigger a deflection.
inline constexpr double kRayClearance = 0.02;

/// Requires at least 12 coefficients and |ray - arg g| < beta * pi / 2.
BorelSum borel_pade(const std::vector<Rational>& coeffs, int beta, const Real& g, const Real& direction = Real(0),
                    std::optional<unsigned> digits = std::nullopt);

/// Pade approximant [l/m] of a power series (exact); denominator normalized to q_0 = 1.
/// The denominator degree is reduced when the Toeplitz system is singular.
struct Pade {
  std::vector<Rational> p, q;
};
Pade pade(const std::vector<Rational>& series, int l, int m);

/// All complex roots of a polynomial (ascending coefficients) by Aberth iteration.
std::vector<Complex> polynomial_roots(const std::vector<Real>& coeffs);

} // namespace anharmonic
