#include "anharmonic/acceptance.hpp"

#include "anharmonic/borel.hpp"
#include "anharmonic/hamiltonian.hpp"
#include "anharmonic/instanton.hpp"
#include "anharmonic/largeorder.hpp"
#include "anharmonic/quantize.hpp"

#include <chrono>
#include <map>
#include <sstream>

namespace anharmonic {

namespace mp = boost::multiprecision;

namespace {

// Tolerances. Changing any of these changes what the suite certifies.
const char* const kActionTolerance = "1e-12";      // quadrature vs closed-form action
const char* const kFixtureDigits = "1e-30";        // irrational fixture identities at P = 40
const char* const kRatioTolerance = "0.05";        // |c_K / predictor - 1| over the top decade
const char* const kSubleadingTolerance = "0.05";   // fitted 1/K constant vs tabulated
const char* const kTwelveDigits = "1e-12";         // analytic 1/K constant vs tabulated
const char* const kSexticBound = "0.2";            // |a| for the sextic fit
const char* const kMomentTolerance = "1e-8";       // dispersion moments vs Gamma forms
const char* const kWidthTolerance = "0.01";        // resonance vs truncated width series
const char* const kLeadingGap = "0.40";            // leading order alone must miss by more
const char* const kResidualBound = "1e-3";         // quantization residual
const char* const kQuarticFitTolerance = "0.05";     // quartic c_1 from complex scaling

Real rel(const Real& a, const Real& b) { return mp::abs(a / b - 1); }

std::string num(const Real& x, int digits = 6) { return format(x, digits); }

// Perturbative tables shared between criteria within one process.
const CoeffTable& table(const AcceptanceOptions& opt, int m, int n, int kmax) {
  static std::map<std::tuple<int, int, int>, CoeffTable> memo;
  auto key = std::make_tuple(m, n, kmax);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, cached_rspt_coeffs(opt.cache, OscillatorSpec(m), n, kmax)).first;
  return it->second;
}

int table_kmax(int m) { return m <= 4 ? 60 : 40; }

RatioDiagnostics diagnostics(const AcceptanceOptions& opt, int m) {
  OscillatorSpec spec(m);
  return ratio_diagnostics(table(opt, m, 0, table_kmax(m)), [&](int K) { return leading_coefficient(spec, 0, K); });
}

Poly epoly(std::initializer_list<Rational> c) { return Poly(Symbol::E, std::vector<Rational>(c)); }

// Least squares for y = sum_{k=1}^{degree} a_k x^k.
std::vector<Real> power_fit(const std::vector<Real>& x, const std::vector<Real>& y, int degree) {
  std::vector<std::vector<Real>> a(degree, std::vector<Real>(degree + 1, Real(0)));
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (int i = 0; i < degree; ++i) {
      Real xi = mp::pow(x[p], i + 1);
      for (int j = 0; j < degree; ++j) a[i][j] += xi * mp::pow(x[p], j + 1);
      a[i][degree] += xi * y[p];
    }
  }
  for (int c = 0; c < degree; ++c)
    for (int r = c + 1; r < degree; ++r) {
      Real f = a[r][c] / a[c][c];
      for (int k = c; k <= degree; ++k) a[r][k] -= f * a[c][k];
    }
  std::vector<Real> out(degree);
  for (int i = degree - 1; i >= 0; --i) {
    Real s = a[i][degree];
    for (int k = i + 1; k < degree; ++k) s -= a[i][k] * out[k];
    out[i] = s / a[i][i];
  }
  return out;
}

// c_1 of the quartic ground-state width from complex-scaling data on g' in [lo, hi].
Real quartic_width_fit(const Real& lo, const Real& hi, int points, int degree) {
  OscillatorSpec q(4);
  std::vector<Real> x, y;
  for (int i = 0; i < points; ++i) {
    Real gp = lo + (hi - lo) * i / (points - 1);
    auto r = resonance(q, 0, -gp);
    x.push_back(gp);
    y.push_back(r.energy.im / width_leading(q, 0, -gp) - 1);
  }
  return power_fit(x, y, degree)[0];
}

void c1(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "B-function fixtures at order g";
  struct Fixture {
    int m;
    Poly expected;
  };
  const std::vector<Fixture> fixtures{
      {3, epoly({Rational(7, 16), 0, Rational(15, 4)})},
      {4, epoly({Rational(-3, 8), 0, Rational(-3, 2)})},
      {6, epoly({0, Rational(-25, 8), 0, Rational(-5, 2)})},
      {7, epoly({Rational(180675, 2048), 0, Rational(444381, 512), 0, Rational(82005, 128), 0, Rational(3003, 32)})},
  };
  int matched = 0;
  std::string mismatched;
  for (const auto& f : fixtures) {
    auto b = b_function(OscillatorSpec(f.m), 1).series;
    bool ok = b.coeff(0) == epoly({0, 1}) && b.coeff(1) == f.expected;
    matched += ok;
    if (!ok) mismatched += " m=" + std::to_string(f.m);
  }
  r.pass = matched == 4;
  r.measured = std::to_string(matched) + "/4 exact" + (mismatched.empty() ? "" : ", mismatched:" + mismatched);
  r.expected = "4/4 exact (zero tolerance)";
}

void c2(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "instanton actions";
  Real worst = 0;
  int worst_m = 0;
  for (int m = 3; m <= 10; ++m) {
    auto p = action_pair(m);
    Real e = rel(p.numeric, p.closed_form);
    if (e >= worst) {
      worst = e;
      worst_m = m;
    }
  }
  const bool closed = action_rational(3) == Rational(2, 15) && action_rational(4) == Rational(1, 3) &&
                      rel(action_closed_form(6), pi() * mp::pow(Real(2), Real(-5) / 2)) < Real(kFixtureDigits);
  auto a7 = a_fixture(7);
  const Real gamma25 = mp::tgamma(Real(2) / 5);
  const bool a7_gap = a7.leading_discrepancy() && rel(a7.leading_ratio() * gamma25, Real(1)) < Real(kFixtureDigits);
  bool others = true;
  for (int m : {3, 4, 6}) others = others && !a_fixture(m).leading_discrepancy();
  r.pass = worst < Real(kActionTolerance) && closed && a7_gap && others;
  r.measured = "max rel |numeric/closed - 1| = " + num(worst, 3) + " (m=" + std::to_string(worst_m) +
               "); closed forms 2/15, 1/3, pi 2^(-5/2) " + (closed ? "exact" : "MISMATCH") +
               "; tabulated A7 leading * Gamma(2/5) / A(7) = " + num(a7.leading_ratio() * gamma25, 12);
  r.expected = std::string("< ") + kActionTolerance + " for m=3..10; closed forms exact; A7 gap = Gamma(2/5)";
}

void c3(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "cubic n=1 width correction";
  OscillatorSpec c(3);
  auto w = one_instanton_width_series(c, 1, 1);
  Real worst = 0;
  for (const char* gs : {"0.01", "0.03", "0.1"}) {
    Real g(gs);
    Real closed = -8 * mp::exp(-2 / (15 * g)) / (mp::sqrt(pi()) * mp::pow(g, Real(3) / 2));
    worst = std::max<Real>(worst, rel(width_leading(c, 1, g), closed));
  }
  const bool exact = w.c.size() == 2 && w.c[1] == Rational(-853, 16) && w.scale == 1;
  const bool structure = w.prefactor_power == Rational(3, 2) && action_rational(3) == Rational(2, 15);
  r.pass = exact && structure && worst < Real(kFixtureDigits);
  r.measured = "c1 = " + (w.c.size() > 1 ? to_string(w.c[1]) : std::string("missing")) +
               "; prefactor power " + to_string(w.prefactor_power) + "; max rel dev of prefactor " + num(worst, 3);
  r.expected = "c1 = -853/16; -8 e^(-2/(15g)) / (sqrt(pi) g^(3/2))";
}

void c4(CriterionResult& r, const AcceptanceOptions& opt) {
  r.title = "quartic width correction, pipeline and complex scaling";
  auto w = one_instanton_width_series(OscillatorSpec(4), 0, 1);
  const Rational target(-95, 24);
  const bool exact = w.c.size() == 2 && w.c[1] == target && w.scale == 1;
  // Protocol: 11 equally spaced g' in [0.015, 0.04], fit Im E / leading - 1 = sum_{k=1}^{4} a_k g'^k.
  Real fit = quartic_width_fit(Real("0.015"), Real("0.04"), 11, 4);
  Real dev = rel(fit, to_real(target));
  r.pass = exact && dev < Real(kQuarticFitTolerance);
  r.measured = "pipeline c1 = " + (w.c.size() > 1 ? to_string(w.c[1]) : std::string("missing")) +
               "; fitted c1 = " + num(fit) + " (rel dev " + num(dev, 3) + ")";
  r.expected = std::string("-95/24 exact; fit within ") + kQuarticFitTolerance;
  if (opt.suite == Suite::Full) {
    Real narrow = quartic_width_fit(Real("0.003"), Real("0.015"), 21, 8);
    r.notes.push_back("narrow window g' in [0.003, 0.015], degree 8: c1 = " + num(narrow, 10));
    for (int degree : {3, 5, 6}) {
      Real f = quartic_width_fit(Real("0.015"), Real("0.04"), 11, degree);
      r.notes.push_back("fit degree " + std::to_string(degree) + ": c1 = " + num(f) + " (rel dev " +
                        num(rel(f, to_real(target)), 3) + ")");
    }
  }
}

void c5(CriterionResult& r, const AcceptanceOptions& opt) {
  r.title = "large-order leading behaviour";
  Real worst = 0;
  std::ostringstream per;
  for (int m : {3, 4, 6, 7}) {
    auto d = diagnostics(opt, m);
    const int kmax = table_kmax(m);
    Real w = 0;
    for (int K = kmax - 9; K <= kmax; ++K) w = std::max<Real>(w, mp::abs(d.points[K - 1].ratio - 1));
    per << " m=" << m << ":" << num(w, 3);
    worst = std::max<Real>(worst, w);
  }
  r.pass = worst < Real(kRatioTolerance);
  r.measured = "max |ratio - 1| over K in [Kmax-9, Kmax]:" + per.str();
  r.expected = std::string("< ") + kRatioTolerance + " (Kmax 60 for m=3,4; 40 for m=6,7)";
}

void c6(CriterionResult& r, const AcceptanceOptions& opt) {
  r.title = "degree-7 subleading 1/K constant";
  const Real tabulated = tabulated_seventh_degree_constant();
  auto d = diagnostics(opt, 7);
  auto w = one_instanton_width_series(OscillatorSpec(7), 0, 1);
  const Real analytic = inverse_k_constant(w);
  const Real fit_dev = rel(d.fit.a, tabulated);
  const Real analytic_dev = rel(analytic, tabulated);
  r.pass = fit_dev < Real(kSubleadingTolerance) && analytic_dev < Real(kTwelveDigits);
  r.measured = "fitted a = " + num(d.fit.a) + " +- " + num(d.fit.a_error, 2) + " (rel dev " + num(fit_dev, 3) +
               "); from width data a = " + num(analytic, 18) + " (rel dev " + num(analytic_dev, 3) + ")";
  r.expected = num(tabulated, 12) + std::string(" (fit within ") + kSubleadingTolerance + ", analytic within " +
               kTwelveDigits + ")";
  r.notes.push_back("tabulated / width-derived = " + num(tabulated / analytic, 15) + "; sqrt(2) = " +
                    num(mp::sqrt(Real(2)), 15));
  r.notes.push_back("fit vs width-derived constant: rel dev " + num(rel(d.fit.a, analytic), 3));
}

void c7(CriterionResult& r, const AcceptanceOptions& opt) {
  r.title = "sextic absence of a 1/K correction";
  auto d = diagnostics(opt, 6);
  r.pass = mp::abs(d.fit.a) < Real(kSexticBound);
  r.measured = "fitted a = " + num(d.fit.a, 4) + " +- " + num(d.fit.a_error, 2) + " over K in [" +
               std::to_string(d.fit.k_lo) + ", " + std::to_string(d.fit.k_hi) + "]";
  r.expected = std::string("|a| < ") + kSexticBound;
  auto w = one_instanton_width_series(OscillatorSpec(6), 0, 1);
  r.notes.push_back("width series c1 = " + to_string(w.c[1]) + " (no 1/K term at this order)");
}

void c8(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "dispersion moments";
  Real worst = 0;
  std::ostringstream per;
  for (auto [m, K] : {std::pair{4, 20}, std::pair{3, 15}}) {
    OscillatorSpec spec(m);
    auto moment = dispersion_moment(spec, 0, K);
    Real e = rel(moment.value, mp::abs(leading_coefficient(spec, 0, K)));
    per << " m=" << m << ",K=" << K << ":" << num(e, 3);
    worst = std::max<Real>(worst, e);
  }
  r.pass = worst < Real(kMomentTolerance);
  r.measured = "rel dev" + per.str();
  r.expected = std::string("< ") + kMomentTolerance;
}

void c9(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "cubic n=1 resonance vs width series";
  OscillatorSpec c(3);
  const Real g("0.01");
  auto res = resonance(c, 1, g);
  auto w = one_instanton_width_series(c, 1, 1);
  const Real lead = width_leading(c, 1, g);
  // Second-order coefficient as tabulated; the pipeline reaches first order only.
  const Rational c2(33349, 512);
  const Real truncated = lead * (1 + to_real(w.c[1]) * g + to_real(c2) * g * g);
  const Real dev = rel(res.energy.im, truncated);
  const Real lead_dev = rel(res.energy.im, lead);
  r.pass = dev <= Real(kWidthTolerance) && lead_dev > Real(kLeadingGap);
  r.measured = "Im E = " + num(res.energy.im, 10) + " (+- " + num(res.error, 2) + "); vs O(g^2) series " +
               num(truncated, 10) + " rel dev " + num(dev, 3) + "; vs leading only rel dev " + num(lead_dev, 3);
  r.expected = std::string("rel dev <= ") + kWidthTolerance + " with corrections, > " + kLeadingGap + " without";
  r.notes.push_back("Im E / leading = " + num(res.energy.im / lead, 10) + "; series brace = " +
                    num(truncated / lead, 10));
}

void c10(CriterionResult& r, const AcceptanceOptions& opt) {
  r.title = "quantization residual at the cubic resonance";
  OscillatorSpec c(3);
  const Real g("0.005");
  auto res = resonance(c, 0, g);
  // The perturbative anchor is the Borel-Pade sum of the same level.
  auto borel = borel_pade(table(opt, 3, 0, 40).coeffs, 1, g);
  ResidualOptions o;
  o.anchor = Complex(borel.value.re);
  o.b_order = 1;
  const Real r1 = abs(quantization_residual(c, res.energy, g, o).residual);
  o.b_order = 2;
  const Real r2 = abs(quantization_residual(c, res.energy, g, o).residual);
  r.pass = r2 < Real(kResidualBound) && r2 < r1;
  r.measured = "|residual| = " + num(r1, 4) + " (B to g^1), " + num(r2, 4) + " (B to g^2)";
  r.expected = std::string("< ") + kResidualBound + ", decreasing with the B order";
  r.notes.push_back("E = " + num(res.energy.re, 20) + " " + num(res.energy.im, 12) + "i; anchor " +
                    num(borel.value.re, 20));
}

void c11(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "on-shell identity of B";
  int ok = 0, total = 0;
  for (int m : {3, 4, 6, 7}) {
    OscillatorSpec spec(m);
    const int order = m == 7 ? 3 : 5;
    auto b = b_function(spec, order).series;
    for (int n = 0; n <= 4; ++n) {
      auto on = substitute(b, energy_series(rspt_coeffs(spec, n, order)));
      ok += on == Series::scalars(1, order + 1, {{0, Rational(2 * n + 1, 2)}});
      ++total;
    }
  }
  r.pass = ok == total;
  r.measured = std::to_string(ok) + "/" + std::to_string(total) + " zero to truncation";
  r.expected = std::to_string(total) + "/" + std::to_string(total) + " (n=0..4, m=3,4,6,7)";
}

void c12(CriterionResult& r, const AcceptanceOptions&) {
  r.title = "trans-series structure";
  OscillatorSpec q(4);
  auto e = rspt_coeffs(q, 0, 10);
  int ok = 0;
  for (int K = 0; K <= 10; ++K) {
    auto t = trans_series_term(q, 0, 0, 0, K);
    ok += t.euler_gamma == 0 && t.rational == (K % 2 ? Rational(-1) : Rational(1)) * e.coeffs[K];
  }
  auto log_term = trans_series_term(q, 0, 2, 1, 0);
  const bool log_ok = log_term.rational != 0 || log_term.euler_gamma != 0;
  bool rejects = false;
  try {
    trans_series_term(q, 0, 2, 2, 0);
  } catch (const std::invalid_argument&) {
    rejects = true;
  }
  r.pass = ok == 11 && log_ok && rejects;
  r.measured = std::to_string(ok) + "/11 J=0 identities; J=2 L=1 coefficient " +
               to_string(log_term.rational) + "; L=2 " + (rejects ? "rejected" : "accepted");
  r.expected = "11/11; nonzero L=1 coefficient; L=2 rejected";
}

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  using Fn = void (*)(CriterionResult&, const AcceptanceOptions&);
  static const Fn table[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be 1..12");
  CriterionResult r{id, "", false, "", "", {}, 0};
  PrecisionScope scope(kDefaultDigits);
  const auto start = std::chrono::steady_clock::now();
  try {
    table[id - 1](r, options);
  } catch (const std::exception& e) {
    r.pass = false;
    r.measured = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(const AcceptanceOptions& options, const std::vector<int>& ids,
                                       const std::function<void(const CriterionResult&)>& report) {
  std::vector<int> which = ids;
  if (which.empty())
    for (int i = 1; i <= kCriterionCount; ++i) which.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : which) {
    out.push_back(run_criterion(id, options));
    if (report) report(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title
    << "  measured: " << r.measured << "  expected: " << r.expected;
  return s.str();
}

} // namespace anharmonic
