#include "anharmonic/series.hpp"

#include "anharmonic/error.hpp"

#include <algorithm>
#include <sstream>

namespace anharmonic {

namespace {

int sat_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  return static_cast<int>(std::min<long long>(s, Series::kUnbounded));
}

int sat_mul(int a, int b) {
  long long s = static_cast<long long>(a) * b;
  return static_cast<int>(std::clamp<long long>(s, Series::kMinIndex, Series::kUnbounded));
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::string coupling_name(Coupling c) { return c == Coupling::G ? "g" : "-g"; }

} // namespace

Series::Series(Rational step, int truncation, Coupling variable, Symbol symbol)
    : step_(std::move(step)), truncation_(std::min(truncation, kUnbounded)), variable_(variable),
      symbol_(symbol) {
  if (step_ <= 0) throw std::invalid_argument("lattice step must be positive");
  if (truncation_ < kMinIndex) throw std::invalid_argument("truncation below the Laurent bound");
}

Series Series::scalars(Rational step, int truncation, const std::map<int, Rational>& values,
                       Coupling variable) {
  Series s(std::move(step), truncation, variable);
  for (const auto& [k, v] : values) s.set(k, v);
  return s;
}

Poly Series::coeff(int k) const {
  if (k >= truncation_) throw std::out_of_range("coefficient at or beyond truncation");
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly(symbol_) : it->second;
}

Rational Series::scalar(int k) const {
  Poly p = coeff(k);
  if (!p.is_constant()) throw Error("coefficient " + std::to_string(k) + " is not a scalar");
  return p.coeff(0);
}

void Series::set(int k, const Poly& p) {
  if (k < kMinIndex) throw std::out_of_range("index below the Laurent bound");
  if (k >= truncation_) return; // beyond what this series tracks
  if (p.is_zero()) {
    terms_.erase(k);
    return;
  }
  terms_.insert_or_assign(k, p.is_constant() ? p.with_symbol(symbol_) : p);
  if (!p.is_constant()) symbol_ = p.symbol();
}

std::optional<int> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

bool Series::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

Series Series::truncated(int truncation) const {
  Series out(step_, std::min(truncation, truncation_), variable_, symbol_);
  for (const auto& [k, p] : terms_)
    if (k < out.truncation_) out.terms_.emplace(k, p);
  return out;
}

Series Series::refined(const Rational& step) const {
  Rational ratio = step_ / step;
  if (!is_integer(ratio)) throw LatticeMismatch("lattice step " + to_string(step_) +
                                                " is not a multiple of " + to_string(step));
  int r = static_cast<int>(boost::multiprecision::numerator(ratio));
  Series out(step, sat_mul(truncation_, r), variable_, symbol_);
  for (const auto& [k, p] : terms_) out.terms_.emplace(k * r, p);
  return out;
}

Series Series::with_variable(Coupling variable) const {
  if (variable == variable_) return *this;
  if (!is_integer(step_)) throw LatticeMismatch("g <-> -g switch requires an integer lattice");
  Series out(step_, truncation_, variable, symbol_);
  for (const auto& [k, p] : terms_) {
    Rational e = step_ * k;
    bool odd = boost::multiprecision::numerator(e) % 2 != 0;
    out.terms_.emplace(k, odd ? -p : p);
  }
  return out;
}

Series Series::symbol_derivative() const {
  Series out(step_, truncation_, variable_, symbol_);
  for (const auto& [k, p] : terms_) out.set(k, p.derivative());
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return a.step_ == b.step_ && a.truncation_ == b.truncation_ && a.variable_ == b.variable_ &&
         a.terms_ == b.terms_;
}

void Series::check_compatible(const Series& o) const {
  if (step_ != o.step_ || variable_ != o.variable_)
    throw LatticeMismatch("incompatible oscillator conventions: lattice " + to_string(step_) + " in " +
                          coupling_name(variable_) + " vs " + to_string(o.step_) + " in " +
                          coupling_name(o.variable_));
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  truncation_ = std::min(truncation_, o.truncation_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->first >= truncation_ ? terms_.erase(it) : std::next(it);
  for (const auto& [k, p] : o.terms_) {
    if (k >= truncation_) continue;
    auto it = terms_.find(k);
    Poly sum = it == terms_.end() ? p : it->second + p;
    set(k, sum);
  }
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Rational& s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(const Series& a) { return Rational(-1) * a; }
Series operator*(const Rational& s, Series a) { return a *= s; }

Series mul(const Series& a, const Series& b) {
  a.check_compatible(b);
  int va = a.valuation().value_or(a.truncation());
  int vb = b.valuation().value_or(b.truncation());
  int trunc = std::min(sat_add(a.truncation(), vb), sat_add(b.truncation(), va));
  Symbol sym = a.is_scalar() ? b.symbol() : a.symbol();
  Series out(a.step(), trunc, a.variable(), sym);
  std::map<int, Poly> acc;
  for (const auto& [i, p] : a.terms()) {
    for (const auto& [j, q] : b.terms()) {
      int k = i + j;
      if (k >= trunc) break;
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, p * q);
      else
        it->second += p * q;
    }
  }
  for (const auto& [k, p] : acc) out.set(k, p);
  return out;
}

Series compose(const Series& outer, const Series& inner) {
  if (!outer.is_scalar()) throw Error("compose: outer series must have scalar coefficients");
  if (outer.step() != 1) throw LatticeMismatch("compose: outer series must be on the integer lattice");
  if (outer.valuation().value_or(0) < 0) throw Error("compose: outer series has negative powers");
  auto vi = inner.valuation();
  if (vi && *vi <= 0)
    throw Error("compose: inner series has a nonzero constant (or negative) term; "
                "use substitute() for polynomial outer maps");
  int v = vi.value_or(inner.truncation());
  // Unknown outer terms x^j, j >= T, start at index T * v.
  int trunc = outer.is_exact() ? Series::kUnbounded : sat_mul(outer.truncation(), v);
  trunc = std::min(trunc, inner.truncation());

  Series result(inner.step(), Series::kUnbounded, inner.variable(), inner.symbol());
  Series power(inner.step(), Series::kUnbounded, inner.variable(), inner.symbol());
  power.set(0, Rational(1));
  int max_j = outer.terms().empty() ? 0 : outer.terms().rbegin()->first;
  for (int j = 0; j <= max_j; ++j) {
    if (j > 0) power = mul(power, inner).truncated(trunc);
    Rational c = outer.coeff(j).coeff(0);
    if (c != 0) result += c * power;
  }
  return result.truncated(trunc);
}

Series substitute(const Series& s, const Series& e) {
  s.check_compatible(e);
  Series result(s.step(), s.truncation(), s.variable(), e.symbol());
  for (const auto& [k, p] : s.terms()) {
    // Horner: p(e) with series arithmetic.
    Series value(e.step(), Series::kUnbounded, e.variable(), e.symbol());
    const auto& c = p.coeffs();
    for (std::size_t d = c.size(); d-- > 0;) {
      value = mul(value, e);
      Series constant(e.step(), Series::kUnbounded, e.variable(), e.symbol());
      constant.set(0, c[d]);
      value += constant;
    }
    Series shift(e.step(), Series::kUnbounded, e.variable(), e.symbol());
    shift.set(k, Rational(1));
    result += mul(shift, value);
  }
  if (s.terms().empty()) result.relabel(e.symbol());
  return result;
}

Series reverse(const Series& s) {
  if (!s.is_scalar()) throw Error("reverse: scalar series required");
  if (s.step() != 1) throw LatticeMismatch("reverse: integer lattice required");
  auto v = s.valuation();
  if (!v || *v != 1 || s.truncation() <= 1)
    throw Error("reverse: series must start with a nonzero linear term");
  Rational a1 = s.scalar(1);
  const int trunc = s.truncation();
  Series identity(s.step(), trunc, s.variable());
  identity.set(1, Rational(1));
  Series r = (Rational(1) / a1) * identity;
  for (int iter = 1; iter < trunc; ++iter) {
    Series defect = identity - compose(s, r);
    if (defect.terms().empty()) break;
    r += (Rational(1) / a1) * defect;
  }
  return r.truncated(trunc);
}

Series invert_in_symbol(const Series& s, Symbol target) {
  if (s.coeff(0) != Poly::monomial(Rational(1), 1, s.symbol()))
    throw Error("invert_in_symbol: leading coefficient must be the bare symbol");
  Series tail = s;
  tail.set(0, Poly(s.symbol()));
  if (tail.valuation().value_or(1) < 1) throw Error("invert_in_symbol: negative powers present");
  Series y(s.step(), s.truncation(), s.variable(), target);
  y.set(0, Poly::monomial(Rational(1), 1, target));
  Series x = y;
  int iterations = 0;
  for (const auto& [k, p] : s.terms()) iterations = std::max(iterations, k);
  iterations = std::min(std::max(iterations, 1), s.truncation()) + 1;
  for (int it = 0; it < iterations; ++it) {
    Series next = y - substitute(tail, x);
    if (next == x) break;
    x = next;
  }
  return x.truncated(s.truncation());
}

Series exp_series(const Series& a) {
  auto v = a.valuation();
  if (v && *v <= 0) throw Error("exp_series: argument must vanish at g = 0");
  int val = v.value_or(a.truncation());
  int order = a.is_exact() ? 64 : (a.truncation() + val - 1) / std::max(val, 1) + 1;
  Series outer(Rational(1), order);
  Rational fact = 1;
  for (int j = 0; j < order; ++j) {
    if (j > 0) fact *= j;
    outer.set(j, Rational(1) / fact);
  }
  return compose(outer, a);
}

Series reciprocal(const Series& s) {
  if (!s.is_scalar()) throw Error("reciprocal: scalar series required");
  Rational c0 = s.terms().count(0) ? s.scalar(0) : Rational(0);
  if (c0 == 0 || s.valuation().value_or(0) < 0)
    throw Error("reciprocal: leading term must be a nonzero constant");
  Series u = (Rational(1) / c0) * s;
  u.set(0, Rational(0));
  int val = u.valuation().value_or(u.truncation());
  int order = u.is_exact() ? 64 : (u.truncation() + val - 1) / std::max(val, 1) + 1;
  Series outer(Rational(1), order);
  for (int j = 0; j < order; ++j) outer.set(j, Rational(j % 2 ? -1 : 1));
  return (Rational(1) / c0) * compose(outer, u);
}

EvalResult eval_numeric(const Series& s, const Real& g, const EvalOptions& options) {
  PrecisionScope scope(options.digits);
  Real coupling = s.variable() == Coupling::G ? promote(g) : promote(Real(-g));
  Complex x;
  bool needs_branch = false;
  for (const auto& [k, p] : s.terms())
    if (!is_integer(s.step() * k)) needs_branch = true;
  Real step = to_real(s.step());
  if (coupling < 0 && needs_branch) {
    if (!options.principal_branch)
      throw Error("negative coupling on a fractional lattice: select the principal branch explicitly");
    x = pow(Complex(coupling), Complex(step));
  } else if (coupling == 0) {
    x = Complex();
  } else if (coupling < 0) {
    x = Complex(coupling);
  } else {
    x = Complex(boost::multiprecision::pow(coupling, step));
  }

  EvalResult out{Complex(), Real(0), options.digits};
  if (s.terms().empty()) return out;
  if (x.re == 0 && x.im == 0 && s.valuation().value() < 0) throw Error("Laurent term at zero coupling");

  auto coeff_value = [&](const Poly& p) -> Complex {
    if (p.is_constant()) return Complex(to_real(p.coeff(0)));
    if (!options.symbol_value) throw Error("polynomial coefficients need a value for " + symbol_name(p.symbol()));
    return p.eval(promote(*options.symbol_value));
  };

  // Horner on the lattice: x^kmin * sum_k c_k x^(k - kmin).
  const int kmin = s.terms().begin()->first;
  const int kmax = s.terms().rbegin()->first;
  Complex acc;
  for (int k = kmax; k >= kmin; --k) {
    acc *= x;
    auto it = s.terms().find(k);
    if (it != s.terms().end()) acc += coeff_value(it->second);
  }
  Complex head = x.re == 0 && x.im == 0 ? Complex(kmin == 0 ? 1.0 : 0.0) : pow(x, kmin);
  out.value = acc * head;
  out.last_term = abs(coeff_value(s.terms().rbegin()->second) * pow(x, kmax));
  return out;
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, p] : s.terms()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    terms.push_back({{"k", k}, {"poly", coeffs}});
  }
  return {{"lattice_step", to_string(s.step())},
          {"terms", terms},
          {"truncation", s.truncation()},
          {"variable", coupling_name(s.variable())},
          {"symbol", symbol_name(s.symbol())}};
}

Series series_from_json(const nlohmann::json& j) {
  Rational step = parse_rational(j.at("lattice_step").get<std::string>());
  int trunc = j.at("truncation").get<int>();
  Coupling var = Coupling::G;
  if (j.contains("variable")) {
    auto v = j.at("variable").get<std::string>();
    if (v == "-g")
      var = Coupling::MinusG;
    else if (v != "g")
      throw std::invalid_argument("unknown series variable '" + v + "'");
  }
  Symbol sym = j.contains("symbol") ? parse_symbol(j.at("symbol").get<std::string>()) : Symbol::E;
  Series s(step, trunc, var, sym);
  for (const auto& t : j.at("terms")) {
    std::vector<Rational> c;
    for (const auto& x : t.at("poly")) c.push_back(parse_rational(x.get<std::string>()));
    s.set(t.at("k").get<int>(), Poly(sym, std::move(c)));
  }
  return s;
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << to_string(p) << "]*" << coupling_name(s.variable()) << "^(" << to_string(s.step() * k) << ")";
  }
  if (first) os << "0";
  if (!s.is_exact()) os << " + O(" << coupling_name(s.variable()) << "^(" << to_string(s.step() * s.truncation()) << "))";
  return os.str();
}

} // namespace anharmonic
