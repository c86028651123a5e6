#pragma once

#include "anharmonic/poly.hpp"
#include "anharmonic/rational.hpp"
#include "anharmonic/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace anharmonic {

enum class Parity { Even, Odd };

/// H = -1/2 d^2/dq^2 + 1/2 q^2 + c q^m with c = g (even m) or sqrt(g) (odd m).
class OscillatorSpec {
public:
  explicit OscillatorSpec(int m);

  int m() const { return m_; }
  Parity parity() const { return m_ % 2 ? Parity::Odd : Parity::Even; }
  bool odd() const { return parity() == Parity::Odd; }

  /// Growth index rho: coefficients behave like Gamma(rho K + n + 1/2).
  Rational rho() const;
  /// Exponent lattice of the nonperturbative sector: 1/(M-2) in g (odd),
  /// 2/(N-2) in -g (even).
  Rational lattice_step() const;
  Coupling instanton_variable() const { return odd() ? Coupling::G : Coupling::MinusG; }

  friend bool operator==(const OscillatorSpec&, const OscillatorSpec&) = default;

private:
  int m_;
};

/// E_n(g) ~ sum_K coeffs[K] g^K, exact.
struct CoeffTable {
  OscillatorSpec spec;
  int n;
  std::vector<Rational> coeffs;

  int kmax() const { return static_cast<int>(coeffs.size()) - 1; }
};

CoeffTable rspt_coeffs(const OscillatorSpec& spec, int n, int kmax);

/// Upper bound on deg P_K(nu): (m-2)K/2 + 1 for even m, (m-2)K + 1 for odd m.
int nu_degree_bound(const OscillatorSpec& spec, int k);

/// E(nu, g) = sum_K polys[K](nu) g^K, valid at every nu = n + 1/2.
struct NuPolyTable {
  OscillatorSpec spec;
  std::vector<Poly> polys;

  int kmax() const { return static_cast<int>(polys.size()) - 1; }
};

/// Interpolates exact tables over levels 0..D_K and checks one more level;
/// throws ConsistencyError on mismatch.
NuPolyTable rspt_nu_polys(const OscillatorSpec& spec, int kmax);

Series energy_series(const CoeffTable& table);
Series energy_series(const NuPolyTable& table); // coefficients polynomial in nu

std::string to_csv(const CoeffTable& table);
nlohmann::json to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const nlohmann::json& j);

} // namespace anharmonic
