#pragma once

#include "anharmonic/numeric.hpp"
#include "anharmonic/poly.hpp"
#include "anharmonic/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>

namespace anharmonic {

/// Expansion variable of a series: powers of g or of (-g).
enum class Coupling { G, MinusG };

/// Truncated formal series  sum_k c_k * (coupling)^(k * step)  on an explicit
/// exponent lattice. Coefficients are polynomials (constants for scalar
/// series). Indices at or above `truncation` are unknown, never reported.
///
/// Laurent heads are allowed down to kMinIndex. A truncation of kUnbounded
/// marks an exact (finite) series.
class Series {
public:
  static constexpr int kMinIndex = -64;
  static constexpr int kUnbounded = 1 << 28;

  Series(Rational step, int truncation, Coupling variable = Coupling::G, Symbol symbol = Symbol::E);

  /// Scalar series from (index, value) pairs.
  static Series scalars(Rational step, int truncation, const std::map<int, Rational>& values,
                        Coupling variable = Coupling::G);

  const Rational& step() const { return step_; }
  int truncation() const { return truncation_; }
  Coupling variable() const { return variable_; }
  Symbol symbol() const { return symbol_; }
  const std::map<int, Poly>& terms() const { return terms_; }

  Poly coeff(int k) const;
  /// Constant coefficient at k; throws if the coefficient is a nonconstant polynomial.
  Rational scalar(int k) const;
  void set(int k, const Poly& p);
  void set(int k, const Rational& c) { set(k, Poly::constant(c, symbol_)); }

  std::optional<int> valuation() const;
  bool is_scalar() const;
  bool is_exact() const { return truncation_ >= kUnbounded; }

  Series truncated(int truncation) const;
  /// Re-express on a finer lattice; step() must be an integer multiple of `step`.
  Series refined(const Rational& step) const;
  /// Switch between powers of g and powers of (-g). Only valid on an integer
  /// exponent lattice, where (-1)^exponent is rational.
  Series with_variable(Coupling variable) const;
  /// Coefficient-wise derivative with respect to the polynomial symbol.
  Series symbol_derivative() const;

  friend bool operator==(const Series& a, const Series& b);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);

private:
  void check_compatible(const Series& o) const;
  void relabel(Symbol s) { symbol_ = s; }
  friend Series mul(const Series&, const Series&);
  friend Series substitute(const Series&, const Series&);

  Rational step_;
  int truncation_;
  Coupling variable_;
  Symbol symbol_;
  std::map<int, Poly> terms_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Rational& s, Series a);
/// Truncated product; result truncation is min(ta + vb, tb + va).
Series mul(const Series& a, const Series& b);
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// outer(inner(g)): outer is a scalar series in a formal variable on the
/// integer lattice with no negative powers; inner must have no constant term.
Series compose(const Series& outer, const Series& inner);

/// Replace the polynomial variable of `s` by the series `e` (which may have a
/// constant term and polynomial coefficients in another symbol).
Series substitute(const Series& s, const Series& e);

/// Compositional inverse of a scalar integer-lattice series x*a1 + a2 x^2 + ...
Series reverse(const Series& s);

/// Given s = X + sum_{k>=1} P_k(X) g^k, return X(Y, g) with s(X(Y, g), g) = Y,
/// coefficients as polynomials in `target`.
Series invert_in_symbol(const Series& s, Symbol target);

Series exp_series(const Series& a);  // a without constant term
Series reciprocal(const Series& s);  // scalar s with nonzero constant term

struct EvalResult {
  Complex value;
  Real last_term; // magnitude of the highest included term
  unsigned digits;
};

struct EvalOptions {
  unsigned digits = kDefaultDigits;
  /// Permit non-integer powers of a negative coupling; uses the principal
  /// branch (coupling approached from above the real axis).
  bool principal_branch = false;
  std::optional<Complex> symbol_value; // value of E / nu for polynomial coefficients
};

EvalResult eval_numeric(const Series& s, const Real& g, const EvalOptions& options = {});

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

std::string to_string(const Series& s);

} // namespace anharmonic
