#include "anharmonic/largeorder.hpp"

#include "anharmonic/error.hpp"
#include "anharmonic/instanton.hpp"

namespace anharmonic {

namespace mp = boost::multiprecision;

namespace {

Real log_beta_sym(int m) {
  Real p = Real(m) / (m - 2);
  return 2 * mp::lgamma(p) - mp::lgamma(2 * p);
}

} // namespace

std::pair<Real, int> log_leading(const OscillatorSpec& spec, int n, int K) {
  if (K < 1 || n < 0) throw std::invalid_argument("large-order predictor needs K >= 1, n >= 0");
  const int m = spec.m();
  const Real rho = to_real(spec.rho());
  const Real arg = rho * K + n + Real(0.5);
  const Real two_power = spec.odd() ? Real(2 * K + 1 - n) : Real(K + 1 - n);
  Real lg = mp::log(Real(m - 2)) + mp::lgamma(arg) - arg * log_beta_sym(m) - Real(1.5) * mp::log(pi()) -
            mp::lgamma(Real(n + 1)) - two_power * mp::log(Real(2));
  int sign = spec.odd() ? -1 : (K % 2 ? 1 : -1);
  return {lg, sign};
}

Real leading_coefficient(const OscillatorSpec& spec, int n, int K) {
  auto [lg, sign] = log_leading(spec, n, K);
  return sign * mp::exp(lg);
}

Real leading_even(int N, int n, int K) {
  OscillatorSpec spec(N);
  if (spec.odd()) throw std::invalid_argument("leading_even needs an even degree");
  return leading_coefficient(spec, n, K);
}

Real leading_odd(int M, int n, int K) {
  OscillatorSpec spec(M);
  if (!spec.odd()) throw std::invalid_argument("leading_odd needs an odd degree");
  return leading_coefficient(spec, n, K);
}

Real width_brace(const WidthSeries& width, int K, int depth) {
  if (depth > width.order())
    throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds the width series order " +
                                std::to_string(width.order()));
  const Real rho = to_real(width.spec.rho());
  const Real arg = rho * K + width.n + Real(0.5);
  const Real lg0 = mp::lgamma(arg);
  Real sum = 0;
  for (int k = 0; k <= depth; ++k) {
    if (width.c[k] == 0) continue;
    sum += width.coefficient(k) * mp::pow(width.action, k) * mp::exp(mp::lgamma(arg - k) - lg0);
  }
  return sum;
}

Real subleading_from_width(const WidthSeries& width, int K, int depth) {
  return leading_coefficient(width.spec, width.n, K) * width_brace(width, K, depth);
}

Real inverse_k_constant(const WidthSeries& width) {
  if (width.order() < 1) throw std::invalid_argument("width series has no first correction");
  return width.coefficient(1) * width.action / to_real(width.spec.rho());
}

Real tabulated_seventh_degree_constant() {
  const Real phi = (mp::sqrt(Real(5)) + 1) / 2;
  return -mp::sqrt(Real(2)) * 17 * pi() / (mp::pow(Real(5), Real(1) / 4) * mp::pow(phi, Real(3) / 2) * 450);
}

QuadResult<Real> dispersion_moment(const std::function<Real(const Real&)>& abs_im, int K, const Real& peak,
                                   const Real& width, const Real& tol) {
  if (K < 1) throw std::invalid_argument("moment order K must be at least 1");
  auto integrand = [&](const Real& t) {
    Real y = peak + width * t;
    Real s = mp::exp(y);
    // Far nodes of the sinh-sinh rule leave the representable range.
    if (!(s > 0) || !mp::isfinite(s)) return Real(0);
    return abs_im(s) * mp::exp(-K * y);
  };
  auto q = sinh_sinh(integrand, Real(0), tol);
  q.value *= width / pi();
  q.error *= width / pi();
  return q;
}

QuadResult<Real> dispersion_moment(const OscillatorSpec& spec, int n, int K, unsigned digits) {
  PrecisionScope scope(digits);
  const Real rho = to_real(spec.rho());
  const Real a = action_closed_form(spec.m());
  const Real nu = Real(n) + Real(0.5);
  // Peak of |Im E(s)| s^(-K) in y = log|s|.
  const Real peak = -rho * mp::log((rho * K + nu) / a);
  const Real width = rho / mp::sqrt(rho * K + nu);
  auto abs_im = [&](const Real& s) { return -width_leading(spec, n, spec.odd() ? s : Real(-s)); };
  return dispersion_moment(abs_im, K, peak, width, mp::pow(Real(10), -static_cast<int>(digits) + 10));
}

RatioDiagnostics ratio_diagnostics(const CoeffTable& table, const std::function<Real(int)>& predictor,
                                   std::optional<std::pair<int, int>> window) {
  RatioDiagnostics out;
  const int kmax = table.kmax();
  if (kmax < 10) throw std::invalid_argument("ratio diagnostics need at least 10 orders");
  for (int k = 1; k <= kmax; ++k) {
    Real c = to_real(table.coeffs[k]);
    Real p = predictor(k);
    out.points.push_back({k, c, p, c / p});
  }
  auto [lo, hi] = window.value_or(std::make_pair(kmax / 2, kmax));
  lo = std::max(lo, 1);
  hi = std::min(hi, kmax);
  if (hi - lo < 1) throw std::invalid_argument("fit window must contain at least two orders");
  // Minimize sum K^2 (r - 1 - a/K)^2: a is the mean of K (r - 1).
  Real sum = 0;
  const int count = hi - lo + 1;
  for (int k = lo; k <= hi; ++k) sum += k * (out.points[k - 1].ratio - 1);
  Real a = sum / count;
  Real ss = 0;
  for (int k = lo; k <= hi; ++k) {
    Real r = k * (out.points[k - 1].ratio - 1) - a;
    ss += r * r;
  }
  out.fit = {lo, hi, a, mp::sqrt(ss / (count - 1) / count)};
  return out;
}

} // namespace anharmonic
