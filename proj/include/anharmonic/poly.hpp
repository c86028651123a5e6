#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anharmonic {

/// Polynomial variables that appear in the level / energy maps.
enum class Symbol { E, Nu };

std::string symbol_name(Symbol s);
Symbol parse_symbol(std::string_view name);

/// Dense univariate polynomial with exact coefficients, lowest degree first.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
class Poly {
public:
  explicit Poly(Symbol symbol = Symbol::E) : symbol_(symbol) {}
  Poly(Symbol symbol, std::vector<Rational> coeffs);

  static Poly constant(const Rational& c, Symbol symbol = Symbol::E);
  static Poly monomial(const Rational& c, int degree, Symbol symbol = Symbol::E);

  Symbol symbol() const { return symbol_; }
  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Poly with_symbol(Symbol s) const { return Poly(s, coeffs_); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Real eval(const Real& x) const;
  Complex eval(const Complex& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.symbol_ == b.symbol_ && a.coeffs_ == b.coeffs_;
  }

  /// Exact interpolating polynomial through (xs[i], ys[i]); xs distinct.
  static Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys,
                          Symbol symbol);

private:
  void trim();
  void check_symbol(const Poly& o) const;

  Symbol symbol_;
  std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(Poly a, const Poly& b);
Poly operator*(const Rational& s, Poly a);

std::string to_string(const Poly& p);

} // namespace anharmonic
