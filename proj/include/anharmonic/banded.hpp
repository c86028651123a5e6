#pragma once

#include "anharmonic/numeric.hpp"

#include <vector>

namespace anharmonic {

/// Square complex matrix with `lower` sub- and `upper` super-diagonals.
class BandedMatrix {
public:
  BandedMatrix(int n, int lower, int upper);

  int size() const { return n_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }
  bool in_band(int i, int j) const { return j - i <= ku_ && i - j <= kl_; }

  Complex& at(int i, int j) { return data_[index(i, j)]; }
  const Complex& at(int i, int j) const { return data_[index(i, j)]; }
  /// Zero outside the band.
  Complex get(int i, int j) const;

  std::vector<Complex> multiply(const std::vector<Complex>& x) const;

private:
  std::size_t index(int i, int j) const;

  int n_, kl_, ku_;
  std::vector<Complex> data_; // row i holds columns i-kl .. i+ku
};

/// LU factorization with partial pivoting; U gains kl extra super-diagonals.
class BandedLU {
public:
  explicit BandedLU(const BandedMatrix& a);

  bool singular() const { return singular_; }
  std::vector<Complex> solve(std::vector<Complex> b) const;

private:
  Complex& at(int i, int j) { return rows_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)]; }
  const Complex& at(int i, int j) const { return rows_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)]; }

  int n_, kl_, ku_;
  std::size_t width_;
  std::vector<Complex> rows_; // row i holds columns i-kl .. i+kl+ku
  std::vector<int> pivot_;
  bool singular_ = false;
};

} // namespace anharmonic
