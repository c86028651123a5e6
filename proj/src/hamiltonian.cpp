#include "anharmonic/hamiltonian.hpp"

#include "anharmonic/instanton.hpp"

#include <algorithm>
#include <cmath>

namespace anharmonic {

namespace mp = boost::multiprecision;

namespace {

// Symmetric banded real matrix stored as rows i: columns i-b .. i+b.
struct RealBand {
  int n, b;
  std::vector<Real> v;
  RealBand(int n_, int b_) : n(n_), b(b_), v(static_cast<std::size_t>(n_) * (2 * b_ + 1)) {}
  Real& at(int i, int j) { return v[static_cast<std::size_t>(i) * (2 * b + 1) + (j - i + b)]; }
  Real get(int i, int j) const {
    if (i < 0 || i >= n || j < 0 || j >= n || std::abs(i - j) > b) return Real(0);
    return v[static_cast<std::size_t>(i) * (2 * b + 1) + (j - i + b)];
  }
};

// Position operator in units of the oscillator length: X_{j,j+1} = sqrt((j+1)/2).
RealBand position(int n) {
  RealBand x(n, 1);
  for (int j = 0; j + 1 < n; ++j) {
    Real e = mp::sqrt(Real(j + 1) / 2);
    x.at(j, j + 1) = e;
    x.at(j + 1, j) = e;
  }
  return x;
}

RealBand times_position(const RealBand& a, const RealBand& x) {
  RealBand out(a.n, a.b + 1);
  for (int i = 0; i < a.n; ++i)
    for (int j = std::max(0, i - out.b); j <= std::min(a.n - 1, i + out.b); ++j)
      out.at(i, j) = a.get(i, j - 1) * x.get(j - 1, j) + a.get(i, j + 1) * x.get(j + 1, j);
  return out;
}

} // namespace

ScaledHamiltonian build_hamiltonian(const OscillatorSpec& spec, const Real& g, const Real& theta, int dim,
                                    const Real& basis_scale) {
  const int m = spec.m();
  if (dim < 16) throw std::invalid_argument("basis dimension must be at least 16");
  if (theta < 0 || theta >= pi() / (m + 2))
    throw std::invalid_argument("rotation angle must lie in [0, pi/(m+2)) = [0, " + format(pi() / (m + 2), 6) + ")");
  const Real th = promote(theta), s = promote(basis_scale);

  // Powers are formed on a padded basis so the truncated block is exact.
  const int big = dim + m + 2;
  RealBand x = position(big);
  RealBand x2 = times_position(x, x);
  RealBand xm = x;
  for (int p = 1; p < m; ++p) xm = times_position(xm, x);

  Complex c;
  if (!spec.odd()) c = Complex(promote(g));
  else if (g >= 0) c = Complex(mp::sqrt(promote(g)));
  else c = Complex(Real(0), mp::sqrt(-promote(g)));

  const Complex kin = polar(1 / (s * s), -2 * th);
  const Complex pot = polar(s * s / 2, 2 * th);
  const Complex anh = c * polar(mp::pow(s, m), m * th);

  const int bw = std::max(m, 2);
  ScaledHamiltonian h{spec, promote(g), th, dim, s, BandedMatrix(dim, bw, bw)};
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j <= std::min(dim - 1, i + bw); ++j) {
      Real q2 = x2.get(i, j);
      Real t = (i == j ? Real(i) + Real(0.5) : Real(0)) - q2 / 2; // p^2/2 = H0 - X^2/2
      Complex e = kin * Complex(t) + pot * Complex(q2);
      Real qm = xm.get(i, j);
      if (qm != 0) e += anh * Complex(qm);
      h.matrix.at(i, j) = e;
      h.matrix.at(j, i) = e;
    }
  }
  return h;
}

namespace {

Complex bilinear(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void rescale(std::vector<Complex>& x) {
  Real big = 0;
  for (const auto& v : x) big = std::max<Real>(big, std::max<Real>(mp::abs(v.re), mp::abs(v.im)));
  if (big == 0) throw ConvergenceError("inverse iteration collapsed to the zero vector");
  Real inv = 1 / big;
  for (auto& v : x) v = inv * v;
}

BandedMatrix shifted(const BandedMatrix& h, const Complex& sigma) {
  BandedMatrix a = h;
  for (int i = 0; i < a.size(); ++i) a.at(i, i) -= sigma;
  return a;
}

} // namespace

EigenResult nearest_eigenvalue(const BandedMatrix& h, const Complex& seed, int start_index, int max_iterations) {
  const int n = h.size();
  const Real tol = mp::pow(Real(10), 8 - static_cast<int>(working_digits()));
  std::vector<Complex> x(n);
  x[std::clamp(start_index, 0, n - 1)] = Complex(1.0);

  // Fixed shift first: pulls the vector towards the eigenvalue nearest the seed.
  BandedLU fixed(shifted(h, seed));
  if (fixed.singular()) return {seed, Real(0), 0};
  for (int it = 0; it < 4; ++it) {
    x = fixed.solve(x);
    rescale(x);
  }
  Complex sigma = bilinear(x, h.multiply(x)) / bilinear(x, x);
  int it = 0;
  for (; it < max_iterations; ++it) {
    BandedLU lu(shifted(h, sigma));
    if (lu.singular()) break;
    x = lu.solve(x);
    rescale(x);
    Complex next = bilinear(x, h.multiply(x)) / bilinear(x, x);
    Real change = abs(next - sigma);
    sigma = next;
    if (change <= tol * abs(sigma)) break;
  }
  if (it == max_iterations) throw ConvergenceError("Rayleigh-quotient iteration did not converge");
  auto hx = h.multiply(x);
  Real r = 0, nx = 0;
  for (int i = 0; i < n; ++i) {
    r += norm(hx[i] - sigma * x[i]);
    nx += norm(x[i]);
  }
  return {sigma, mp::sqrt(r / nx), it + 1};
}

std::vector<Real> default_thetas(int m) {
  std::vector<Real> t;
  const Real span = pi() / (2 * (m + 2));
  for (int i = 0; i < 8; ++i) t.push_back(Real("0.1") + span * i / 7);
  return t;
}

std::vector<int> default_dims() { return {200, 300, 450}; }

Complex resonance_seed(const OscillatorSpec& spec, int n, const Real& g) {
  const Real gp = promote(g);
  auto table = rspt_coeffs(spec, n, 40);
  Real sum = 0, power = 1, last = -1;
  for (int k = 0; k <= table.kmax(); ++k) {
    Real term = to_real(table.coeffs[k]) * power;
    if (k > 1 && last >= 0 && mp::abs(term) > last) break;
    sum += term;
    last = mp::abs(term);
    power *= gp;
  }
  Real im = 0;
  const bool regime = spec.odd() ? gp > 0 : gp < 0;
  if (regime) im = width_leading(spec, n, gp);
  return Complex(sum, im);
}

ResonanceResult resonance(const OscillatorSpec& spec, int n, const Real& g, const ResonanceOptions& options) {
  if (n < 0) throw std::invalid_argument("level must be non-negative");
  const bool regime = spec.odd() ? g > 0 : g < 0;
  unsigned digits = options.digits.value_or(kDefaultDigits);
  if (!options.digits && regime && g != 0) {
    PrecisionScope probe(kDefaultDigits);
    if (mp::abs(width_leading(spec, n, g)) < Real("1e-20")) digits = 80;
  }
  PrecisionScope scope(digits);
  if (g == 0) return {Complex(Real(2 * n + 1) / 2), Real(0), 0, digits, Real(0), {}};

  const auto thetas = options.thetas.empty() ? default_thetas(spec.m()) : options.thetas;
  const auto dims = options.dims.empty() ? default_dims() : options.dims;
  const Complex seed = options.seed ? promote(*options.seed) : resonance_seed(spec, n, g);

  const int nt = static_cast<int>(thetas.size()), nd = static_cast<int>(dims.size());
  std::vector<ResonanceCell> table;
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nd; ++j) {
      ResonanceCell cell{promote(thetas[i]), dims[j], Complex(), false};
      try {
        auto h = build_hamiltonian(spec, g, thetas[i], dims[j], options.basis_scale);
        auto e = nearest_eigenvalue(h.matrix, seed, n);
        cell.energy = e.value;
        cell.converged = true;
      } catch (const ConvergenceError&) {
      }
      table.push_back(cell);
    }
  }

  auto cell_at = [&](int i, int j) -> const ResonanceCell& { return table[static_cast<std::size_t>(i) * nd + j]; };
  int best = -1;
  Real best_var = 0;
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nd; ++j) {
      const auto& c = cell_at(i, j);
      if (!c.converged) continue;
      Real var = -1;
      const int di[] = {-1, 1, 0, 0}, dj[] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        int a = i + di[k], b = j + dj[k];
        if (a < 0 || a >= nt || b < 0 || b >= nd || !cell_at(a, b).converged) continue;
        var = std::max<Real>(var, abs(cell_at(a, b).energy - c.energy));
      }
      if (var < 0) continue;
      if (best < 0 || var < best_var) {
        best = i * nd + j;
        best_var = var;
      }
    }
  }
  if (best < 0) throw NoPlateau("no converged neighbouring (theta, dim) cells", table);
  const auto& pick = table[best];
  Real scale = mp::abs(pick.energy.im) > 0 ? mp::abs(pick.energy.im) : abs(pick.energy);
  if (!regime) scale = abs(pick.energy);
  const Real tol = regime ? promote(options.plateau_tolerance) : Real("1e-10");
  if (best_var > tol * scale)
    throw NoPlateau("no plateau: smallest local variation " + format(best_var, 4) + " exceeds " +
                        format(tol * scale, 4),
                    table);
  return {pick.energy, pick.theta, pick.dim, digits, best_var, table};
}

} // namespace anharmonic
