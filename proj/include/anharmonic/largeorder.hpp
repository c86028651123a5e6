#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/quadrature.hpp"
#include "anharmonic/quantize.hpp"
#include "anharmonic/rspt.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace anharmonic {

/// Leading large-order growth of E_{n,K} for even degree N:
///   (-1)^(K+1) (N-2) Gamma(rho K + n + 1/2) B^(-rho K - n - 1/2) / (pi^(3/2) n! 2^(K+1-n)),
/// rho = (N-2)/2, B = B(N/(N-2), N/(N-2)).
Real leading_even(int N, int n, int K);
/// Odd degree M:
///   (2-M) Gamma((M-2)K + n + 1/2) B^(-(M-2)K - n - 1/2) / (pi^(3/2) n! 2^(2K+1-n)).
Real leading_odd(int M, int n, int K);
Real leading_coefficient(const OscillatorSpec& spec, int n, int K);
/// log|leading| and its sign, for K where the value itself is unwieldy.
std::pair<Real, int> log_leading(const OscillatorSpec& spec, int n, int K);

/// Relative correction from the width series via Gamma-function moments:
///   sum_{k<=depth} c_k scale^k A^k Gamma(rho K + n + 1/2 - k) / Gamma(rho K + n + 1/2).
Real width_brace(const WidthSeries& width, int K, int depth);
Real subleading_from_width(const WidthSeries& width, int K, int depth);
/// Coefficient a of the 1/K correction implied by c_1: c_1 scale A / rho.
Real inverse_k_constant(const WidthSeries& width);

/// The tabulated degree-7 constant -(2^(1/2) 17 pi) / (5^(1/4) phi^(3/2) 450).
Real tabulated_seventh_degree_constant();

/// (1/pi) * integral_0^inf |Im E(s)| s^(-K-1) ds evaluated in log s. `peak`
/// and `width` locate the integrand maximum in log s.
QuadResult<Real> dispersion_moment(const std::function<Real(const Real&)>& abs_im, int K, const Real& peak,
                                   const Real& width, const Real& tol);
/// Same for the leading width of (spec, n): matches |leading_coefficient|.
QuadResult<Real> dispersion_moment(const OscillatorSpec& spec, int n, int K, unsigned digits = kDefaultDigits);

struct RatioPoint {
  int K;
  Real coefficient;
  Real predictor;
  Real ratio;
};

/// Weighted (K^2) least-squares fit of ratio - 1 = a / K over [k_lo, k_hi].
struct RatioFit {
  int k_lo, k_hi;
  Real a, a_error;
};

struct RatioDiagnostics {
  std::vector<RatioPoint> points;
  RatioFit fit;
};

/// Default window [Kmax/2, Kmax].
RatioDiagnostics ratio_diagnostics(const CoeffTable& table, const std::function<Real(int)>& predictor,
                                   std::optional<std::pair<int, int>> window = std::nullopt);

} // namespace anharmonic
