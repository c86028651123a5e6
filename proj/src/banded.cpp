#include "anharmonic/banded.hpp"

#include "anharmonic/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace anharmonic {

BandedMatrix::BandedMatrix(int n, int lower, int upper)
    : n_(n), kl_(lower), ku_(upper), data_(static_cast<std::size_t>(n) * (lower + upper + 1)) {
  if (n < 1 || lower < 0 || upper < 0) throw std::invalid_argument("invalid banded matrix shape");
}

std::size_t BandedMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || !in_band(i, j)) throw std::out_of_range("outside the band");
  return static_cast<std::size_t>(i) * (kl_ + ku_ + 1) + (j - i + kl_);
}

Complex BandedMatrix::get(int i, int j) const { return in_band(i, j) ? at(i, j) : Complex(); }

std::vector<Complex> BandedMatrix::multiply(const std::vector<Complex>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> y(n_);
  for (int i = 0; i < n_; ++i) {
    const int lo = std::max(0, i - kl_), hi = std::min(n_ - 1, i + ku_);
    for (int j = lo; j <= hi; ++j) y[i] += at(i, j) * x[j];
  }
  return y;
}

BandedLU::BandedLU(const BandedMatrix& a)
    : n_(a.size()), kl_(a.lower()), ku_(a.upper()), width_(2 * a.lower() + a.upper() + 1),
      rows_(static_cast<std::size_t>(a.size()) * (2 * a.lower() + a.upper() + 1)), pivot_(a.size()) {
  for (int i = 0; i < n_; ++i) {
    const int lo = std::max(0, i - kl_), hi = std::min(n_ - 1, i + ku_);
    for (int j = lo; j <= hi; ++j) at(i, j) = a.at(i, j);
  }
  for (int k = 0; k < n_; ++k) {
    const int last_row = std::min(n_ - 1, k + kl_);
    const int last_col = std::min(n_ - 1, k + kl_ + ku_);
    int p = k;
    Real best = norm(at(k, k));
    for (int i = k + 1; i <= last_row; ++i) {
      Real v = norm(at(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    pivot_[k] = p;
    if (best == 0) {
      singular_ = true;
      continue;
    }
    if (p != k)
      for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
    const Complex inv = Complex(1.0) / at(k, k);
    for (int i = k + 1; i <= last_row; ++i) {
      Complex l = at(i, k) * inv;
      at(i, k) = l;
      if (l.re == 0 && l.im == 0) continue;
      for (int j = k + 1; j <= last_col; ++j) at(i, j) -= l * at(k, j);
    }
  }
}

std::vector<Complex> BandedLU::solve(std::vector<Complex> b) const {
  if (singular_) throw ConvergenceError("banded LU: matrix is singular");
  if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("dimension mismatch");
  for (int k = 0; k < n_; ++k) {
    if (pivot_[k] != k) std::swap(b[k], b[pivot_[k]]);
    const int last_row = std::min(n_ - 1, k + kl_);
    for (int i = k + 1; i <= last_row; ++i) b[i] -= at(i, k) * b[k];
  }
  for (int i = n_ - 1; i >= 0; --i) {
    const int last_col = std::min(n_ - 1, i + kl_ + ku_);
    for (int j = i + 1; j <= last_col; ++j) b[i] -= at(i, j) * b[j];
    b[i] /= at(i, i);
  }
  return b;
}

} // namespace anharmonic
