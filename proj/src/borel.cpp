#include "anharmonic/borel.hpp"

#include "anharmonic/error.hpp"
#include "anharmonic/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace anharmonic {

namespace mp = boost::multiprecision;

namespace {

// Solves A x = b exactly; returns false when A is singular.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return true;
}

Complex horner(const std::vector<Real>& c, const Complex& z) {
  Complex s;
  for (std::size_t i = c.size(); i-- > 0;) s = s * z + Complex(c[i]);
  return s;
}

std::vector<Real> to_reals(const std::vector<Rational>& v) {
  std::vector<Real> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_real(x));
  return out;
}

Real angle_distance(const Real& a, const Real& b) {
  Real d = mp::fmod(mp::abs(a - b), 2 * pi());
  return d > pi() ? Real(2 * pi() - d) : d;
}

struct Laplace {
  Complex value;
  bool ok;
};

Laplace laplace(const Pade& pd, int beta, const Real& g, const Real& ray) {
  const auto p = to_reals(pd.p), q = to_reals(pd.q);
  const Real garg = g < 0 ? pi() : Real(0);
  const Real psi = (ray - garg) / beta;
  const Complex dir = polar(Real(1), psi);
  const Complex dirb = polar(mp::abs(g), psi * beta + garg);
  auto f = [&](const Real& r) -> Complex {
    Complex t = dirb * Complex(mp::pow(r, beta));
    Complex den = horner(q, t);
    if (abs(den) == 0) return Complex();
    return exp(-(r * dir)) * horner(p, t) / den;
  };
  try {
    const Real tol = mp::pow(Real(10), 10 - static_cast<int>(working_digits()));
    auto res = exp_sinh(f, Real(0), tol);
    return {dir * res.value, true};
  } catch (const ConvergenceError&) {
    return {Complex(), false};
  }
}

} // namespace

Pade pade(const std::vector<Rational>& series, int l, int m) {
  if (l < 0 || m < 0 || static_cast<std::size_t>(l + m + 1) > series.size())
    throw std::invalid_argument("Pade order exceeds the available coefficients");
  auto c = [&](int k) { return k < 0 ? Rational(0) : series[k]; };
  std::vector<Rational> q;
  for (; m > 0; --m) {
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    std::vector<Rational> b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i][j] = c(l + 1 + i - (j + 1));
      b[i] = -c(l + 1 + i);
    }
    std::vector<Rational> x;
    if (solve_exact(a, b, x)) {
      q.push_back(Rational(1));
      q.insert(q.end(), x.begin(), x.end());
      break;
    }
  }
  if (q.empty()) q.push_back(Rational(1));
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  std::vector<Rational> p(l + 1);
  for (int k = 0; k <= l; ++k)
    for (int j = 0; j <= k && j < static_cast<int>(q.size()); ++j) p[k] += q[j] * c(k - j);
  return {p, q};
}

std::vector<Complex> polynomial_roots(const std::vector<Real>& coeffs) {
  std::vector<Real> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  std::vector<Real> d(deg);
  for (int i = 1; i <= deg; ++i) d[i - 1] = c[i] * i;

  // Start on a circle sized by the geometric mean of the roots.
  Real radius = mp::pow(mp::abs(c[0] / c[deg]), Real(1) / deg);
  if (radius == 0) radius = 1;
  std::vector<Complex> z(deg);
  for (int k = 0; k < deg; ++k) z[k] = polar(radius, (2 * pi() * k + Real("0.4")) / deg);

  // Steps stall at the conditioning floor of clustered roots; accept that
  // floor once it is below a third of the working digits.
  const Real tol = mp::pow(Real(10), 5 - static_cast<int>(working_digits()));
  const Real loose = mp::pow(Real(10), -static_cast<int>(working_digits()) / 3);
  Real worst = 0;
  for (int it = 0; it < 500; ++it) {
    worst = 0;
    for (int k = 0; k < deg; ++k) {
      Complex w = horner(c, z[k]) / horner(d, z[k]);
      Complex s;
      for (int j = 0; j < deg; ++j)
        if (j != k) s += Complex(1.0) / (z[k] - z[j]);
      Complex step = w / (Complex(1.0) - w * s);
      z[k] -= step;
      worst = std::max<Real>(worst, abs(step) / std::max<Real>(abs(z[k]), Real(1e-300)));
    }
    if (worst < tol) return z;
    if (!mp::isfinite(worst)) break;
  }
  if (mp::isfinite(worst) && worst < loose) return z;
  throw ConvergenceError("Aberth iteration did not converge for the Pade denominator");
}

BorelSum borel_pade(const std::vector<Rational>& coeffs, int beta, const Real& g, const Real& direction,
                    std::optional<unsigned> digits) {
  if (coeffs.size() < 12) throw std::invalid_argument("Borel-Pade summation needs at least 12 coefficients");
  if (beta < 1) throw std::invalid_argument("Borel index must be positive");
  PrecisionScope scope(digits.value_or(working_digits()));
  const Real gp = promote(g), dirp = promote(direction);
  const Real garg = gp < 0 ? pi() : Real(0);
  if (mp::abs(dirp - garg) >= beta * pi() / 2)
    throw std::invalid_argument("Laplace ray does not converge: |direction - arg g| must be below beta*pi/2");

  std::vector<Rational> b(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) b[k] = coeffs[k] / Rational(factorial(beta * static_cast<int>(k)));

  auto build = [&](int count) {
    int l = (count - 1) / 2, m = count - 1 - l;
    std::vector<Rational> head(b.begin(), b.begin() + count);
    return std::pair{pade(head, l, m), l};
  };

  const int total = static_cast<int>(b.size());
  auto [main, l] = build(total);
  BorelSum out{total, beta, dirp, dirp, false, l, static_cast<int>(main.q.size()) - 1, {}, Complex(), Real(0),
               working_digits()};
  out.poles = polynomial_roots(to_reals(main.q));

  auto clear = [&](const Real& ray) {
    for (const auto& pole : out.poles)
      if (angle_distance(arg(pole), ray) < Real(kRayClearance)) return false;
    return true;
  };
  if (!clear(dirp)) {
    out.deflected = true;
    bool found = false;
    for (int step = 1; step <= 20 && !found; ++step) {
      for (int sign : {1, -1}) {
        Real ray = dirp + sign * step * Real(kRayDeflection);
        if (mp::abs(ray - garg) < beta * pi() / 2 && clear(ray)) {
          out.ray = ray;
          found = true;
          break;
        }
      }
    }
    if (!found) throw ConvergenceError("no pole-free Laplace ray near the requested direction");
  }

  auto primary = laplace(main, beta, gp, out.ray);
  if (!primary.ok) throw ConvergenceError("Laplace integral of the Borel-Pade transform did not converge");
  out.value = primary.value;

  // Error from the approximants one and two orders lower.
  bool any = false;
  for (int drop : {1, 2}) {
    auto [alt, al] = build(total - drop);
    (void)al;
    auto r = laplace(alt, beta, gp, out.ray);
    if (!r.ok) continue;
    any = true;
    out.error = std::max<Real>(out.error, abs(r.value - out.value));
  }
  if (!any) out.error = abs(out.value);
  return out;
}

} // namespace anharmonic
