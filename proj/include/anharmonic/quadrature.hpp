#pragma once

#include "anharmonic/error.hpp"
#include "anharmonic/numeric.hpp"

#include <cmath>

namespace anharmonic {

template <class T>
struct QuadResult {
  T value;
  Real error;      // difference between the last two refinement levels
  int evaluations;
  int levels;
};

namespace detail {

inline Real magnitude(const Real& x) { return boost::multiprecision::abs(x); }
inline Real magnitude(const Complex& z) { return abs(z); }

// Trapezoid refinement in the transformed variable u; `point(u, f)` returns
// the weighted integrand summed over the images of u (one or two nodes).
template <class T, class Point>
QuadResult<T> de_refine(Point point, const Real& tol, int max_level, const char* what) {
  const Real eps = tol * Real("1e-3");
  QuadResult<T> out{T{}, Real(0), 0, 0};

  auto sweep = [&](const Real& h, int start, int stride, T& sum) {
    // Walk outward until the contributions are negligible on several successive nodes.
    int quiet = 0;
    for (int j = start;; j += stride) {
      Real u = h * j;
      if (u > Real(7)) break;
      T term = point(u, out.evaluations);
      sum += term;
      if (magnitude(term) <= eps * magnitude(sum)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
  };

  Real h(1);
  T sum = point(Real(0), out.evaluations);
  sweep(h, 1, 1, sum);
  T estimate = T(h) * sum;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    sweep(h, 1, 2, sum);
    T next = T(h) * sum;
    out.error = magnitude(next - estimate);
    out.value = next;
    out.levels = level;
    estimate = next;
    if (level >= 3 && out.error <= tol * magnitude(next)) return out;
  }
  throw ConvergenceError(std::string(what) + ": tolerance not reached after " + std::to_string(max_level) +
                         " levels; last change " + format(out.error, 6) + " on estimate " +
                         format(magnitude(out.value), 17));
}

} // namespace detail

/// Tanh-sinh rule on [a, b]; nodes are placed by their distance to the
/// nearer endpoint so that endpoint clustering keeps full precision.
template <class F>
auto tanh_sinh(F f, const Real& a, const Real& b, const Real& tol, int max_level = 14)
    -> QuadResult<decltype(f(a))> {
  using T = decltype(f(a));
  const Real c = (a + b) / 2, d = (b - a) / 2, half_pi = pi() / 2;
  auto point = [&](const Real& u, int& evals) -> T {
    Real s = half_pi * boost::multiprecision::sinh(u);
    Real e = boost::multiprecision::exp(2 * s);
    Real delta = 2 * d / (1 + e); // distance from the endpoint
    Real ch = boost::multiprecision::cosh(s);
    Real w = d * half_pi * boost::multiprecision::cosh(u) / (ch * ch);
    if (u == 0) {
      ++evals;
      return T(w) * f(c);
    }
    evals += 2;
    return T(w) * (f(a + delta) + f(b - delta));
  };
  return detail::de_refine<T>(point, tol, max_level, "tanh-sinh quadrature");
}

/// Exp-sinh rule on [a, inf) for integrands decaying at infinity.
template <class F>
auto exp_sinh(F f, const Real& a, const Real& tol, int max_level = 14) -> QuadResult<decltype(f(a))> {
  using T = decltype(f(a));
  const Real half_pi = pi() / 2;
  auto point = [&](const Real& u, int& evals) -> T {
    auto node = [&](const Real& v) {
      Real x = boost::multiprecision::exp(half_pi * boost::multiprecision::sinh(v));
      Real w = half_pi * boost::multiprecision::cosh(v) * x;
      return T(w) * f(a + x);
    };
    if (u == 0) {
      ++evals;
      return node(u);
    }
    evals += 2;
    return node(u) + node(-u);
  };
  return detail::de_refine<T>(point, tol, max_level, "exp-sinh quadrature");
}

/// Sinh-sinh rule on the whole real line, nodes centred at `center`.
template <class F>
auto sinh_sinh(F f, const Real& center, const Real& tol, int max_level = 14) -> QuadResult<decltype(f(center))> {
  using T = decltype(f(center));
  const Real half_pi = pi() / 2;
  auto point = [&](const Real& u, int& evals) -> T {
    Real s = half_pi * boost::multiprecision::sinh(u);
    Real x = boost::multiprecision::sinh(s);
    Real w = half_pi * boost::multiprecision::cosh(u) * boost::multiprecision::cosh(s);
    if (u == 0) {
      ++evals;
      return T(w) * f(center);
    }
    evals += 2;
    return T(w) * (f(center + x) + f(center - x));
  };
  return detail::de_refine<T>(point, tol, max_level, "sinh-sinh quadrature");
}

} // namespace anharmonic
