#include "anharmonic/poly.hpp"

#include "anharmonic/error.hpp"

#include <stdexcept>

namespace anharmonic {

std::string symbol_name(Symbol s) { return s == Symbol::E ? "E" : "nu"; }

Symbol parse_symbol(std::string_view name) {
  if (name == "E") return Symbol::E;
  if (name == "nu") return Symbol::Nu;
  throw std::invalid_argument("unknown polynomial symbol '" + std::string(name) + "'");
}

Poly::Poly(Symbol symbol, std::vector<Rational> coeffs) : symbol_(symbol), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const Rational& c, Symbol symbol) { return Poly(symbol, {c}); }

Poly Poly::monomial(const Rational& c, int degree, Symbol symbol) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(symbol, std::move(v));
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_symbol(const Poly& o) const {
  // Zero and constants are symbol-agnostic.
  if (symbol_ != o.symbol_ && !is_constant() && !o.is_constant())
    throw Error("polynomial symbol mismatch: " + symbol_name(symbol_) + " vs " + symbol_name(o.symbol_));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(symbol_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(symbol_, std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::eval(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

Complex Poly::eval(const Complex& x) const {
  Complex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Complex(to_real(*it));
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  check_symbol(o);
  if (is_constant() && !o.is_constant()) symbol_ = o.symbol_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_symbol(o);
  if (is_constant() && !o.is_constant()) symbol_ = o.symbol_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_symbol(o);
  if (is_constant() && !o.is_constant()) symbol_ = o.symbol_;
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Rational(-1) * a; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(const Rational& s, Poly a) { return a *= s; }

Poly Poly::interpolate(std::span<const Rational> xs, std::span<const Rational> ys, Symbol symbol) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  Poly result(symbol);
  for (std::size_t i = n; i-- > 0;) {
    result *= Poly(symbol, {-xs[i], Rational(1)});
    result += Poly::constant(dd[i], symbol);
  }
  return result.with_symbol(symbol);
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c[k]) + ")";
    if (k > 0) out += "*" + symbol_name(p.symbol());
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

} // namespace anharmonic
