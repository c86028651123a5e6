#pragma once

#include "anharmonic/banded.hpp"
#include "anharmonic/error.hpp"
#include "anharmonic/rspt.hpp"

#include <optional>
#include <vector>

namespace anharmonic {

/// Complex-scaled Hamiltonian
///   -1/2 e^(-2i theta) d^2/dq^2 + 1/2 e^(2i theta) q^2 + c e^(i m theta) q^m
/// in the harmonic-oscillator basis with q = s X (s = basis scale).
/// c = g for even m and sqrt(g) (principal) for odd m.
struct ScaledHamiltonian {
  OscillatorSpec spec;
  Real g;
  Real theta;
  int dim;
  Real basis_scale;
  BandedMatrix matrix;

  int bandwidth() const { return matrix.upper(); }
};

/// Requires dim >= 16 and 0 <= theta < pi/(m+2).
ScaledHamiltonian build_hamiltonian(const OscillatorSpec& spec, const Real& g, const Real& theta, int dim,
                                    const Real& basis_scale = Real(1));

struct EigenResult {
  Complex value;
  Real residual; // |H x - value x| / |x|
  int iterations;
};

/// Shifted inverse iteration followed by Rayleigh-quotient refinement with the
/// bilinear (complex-symmetric) quotient x^T H x / x^T x.
EigenResult nearest_eigenvalue(const BandedMatrix& h, const Complex& seed, int start_index = 0,
                               int max_iterations = 60);

struct ResonanceCell {
  Real theta;
  int dim;
  Complex energy;
  bool converged;
};

struct ResonanceResult {
  Complex energy;
  Real theta;
  int dim;
  unsigned digits;
  Real error; // largest deviation from the neighbouring (theta, dim) cells
  std::vector<ResonanceCell> table;
};

class NoPlateau : public ConvergenceError {
public:
  NoPlateau(const std::string& what, std::vector<ResonanceCell> table)
      : ConvergenceError(what), table_(std::move(table)) {}
  const std::vector<ResonanceCell>& table() const { return table_; }

private:
  std::vector<ResonanceCell> table_;
};

struct ResonanceOptions {
  std::vector<Real> thetas;            // default: 8 values in [0.1, 0.1 + pi/(2(m+2))]
  std::vector<int> dims;               // default: {200, 300, 450}
  std::optional<unsigned> digits;      // default: 40, or 80 for predicted widths below 1e-20
  std::optional<Complex> seed;         // default: optimally truncated series + i * leading width
  Real basis_scale = Real(1);
  /// Accepted plateau error relative to |Im E| (or to |E| for real levels).
  Real plateau_tolerance = Real("0.05");
};

std::vector<Real> default_thetas(int m);
std::vector<int> default_dims();

ResonanceResult resonance(const OscillatorSpec& spec, int n, const Real& g, const ResonanceOptions& options = {});

/// Real part of the optimally truncated perturbation series plus i times the
/// leading width (when g lies in the resonance regime).
Complex resonance_seed(const OscillatorSpec& spec, int n, const Real& g);

} // namespace anharmonic
