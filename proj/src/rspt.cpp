#include "anharmonic/rspt.hpp"

#include "anharmonic/error.hpp"

#include <sstream>

namespace anharmonic {

OscillatorSpec::OscillatorSpec(int m) : m_(m) {
  if (m < 3) throw std::invalid_argument("oscillator degree must be at least 3, got " + std::to_string(m));
}

Rational OscillatorSpec::rho() const { return odd() ? Rational(m_ - 2) : Rational(m_ - 2, 2); }

Rational OscillatorSpec::lattice_step() const { return odd() ? Rational(1, m_ - 2) : Rational(2, m_ - 2); }

namespace {

using Coeffs = std::vector<Rational>; // P(q) = sum_j a_j q^j

// Order-by-order solution for psi = P(q) exp(-q^2/2) in powers of the bare
// coupling lambda of lambda q^m. Intermediate normalization: a_n = 0 for k >= 1.
// With L = -1/2 d^2 + q d - n,  L P_k = sum_{j=1}^k E_j P_{k-j} - q^m P_{k-1}.
std::vector<Rational> bare_series(int m, int n, int orders) {
  std::vector<Coeffs> P;
  std::vector<Rational> E{Rational(2 * n + 1, 2)};

  Coeffs p0(n + 1);
  p0[n] = 1;
  for (int j = n - 2; j >= 0; j -= 2) p0[j] = Rational((j + 2) * (j + 1), 2) * p0[j + 2] / (j - n);
  P.push_back(std::move(p0));

  for (int k = 1; k <= orders; ++k) {
    const int deg = n + m * k;
    Coeffs r(deg + 3);
    for (std::size_t j = 0; j < P[k - 1].size(); ++j)
      if (P[k - 1][j] != 0) r[j + m] -= P[k - 1][j];
    for (int i = 1; i < k; ++i) {
      if (E[i] == 0) continue;
      const Coeffs& q = P[k - i];
      for (std::size_t j = 0; j < q.size(); ++j)
        if (q[j] != 0) r[j] += E[i] * q[j];
    }

    Coeffs a(deg + 3);
    auto solve = [&](int j) {
      Rational rhs = r[j] + Rational((j + 2) * (j + 1), 2) * a[j + 2];
      a[j] = rhs / (j - n);
    };
    for (int j = deg; j > n; --j) solve(j);
    Rational ek = -Rational((n + 2) * (n + 1), 2) * a[n + 2] - r[n];
    for (std::size_t j = 0; j < P[0].size(); ++j) r[j] += ek * P[0][j];
    a[n] = 0;
    for (int j = n - 1; j >= 0; --j) solve(j);

    a.resize(deg + 1);
    E.push_back(ek);
    P.push_back(std::move(a));
  }
  return E;
}

} // namespace

CoeffTable rspt_coeffs(const OscillatorSpec& spec, int n, int kmax) {
  if (n < 0 || kmax < 0) throw std::invalid_argument("level and order must be non-negative");
  CoeffTable table{spec, n, {}};
  if (!spec.odd()) {
    table.coeffs = bare_series(spec.m(), n, kmax);
    return table;
  }
  // Odd m: expand in lambda = sqrt(g); odd powers of lambda must cancel.
  auto lam = bare_series(spec.m(), n, 2 * kmax);
  for (int k = 1; k < static_cast<int>(lam.size()); k += 2)
    if (lam[k] != 0)
      throw ConsistencyError("odd power of sqrt(g) survived at order " + std::to_string(k));
  for (int k = 0; k <= kmax; ++k) table.coeffs.push_back(lam[2 * k]);
  return table;
}

int nu_degree_bound(const OscillatorSpec& spec, int k) {
  return spec.odd() ? (spec.m() - 2) * k + 1 : (spec.m() - 2) * k / 2 + 1;
}

NuPolyTable rspt_nu_polys(const OscillatorSpec& spec, int kmax) {
  if (kmax < 0) throw std::invalid_argument("order must be non-negative");
  const int levels = nu_degree_bound(spec, kmax) + 2; // interpolation nodes plus one check
  std::vector<CoeffTable> tables;
  std::vector<Rational> nus;
  for (int n = 0; n < levels; ++n) {
    tables.push_back(rspt_coeffs(spec, n, kmax));
    nus.push_back(Rational(2 * n + 1, 2));
  }
  NuPolyTable out{spec, {}};
  for (int k = 0; k <= kmax; ++k) {
    const int nodes = nu_degree_bound(spec, k) + 1;
    std::vector<Rational> ys;
    for (int n = 0; n < nodes; ++n) ys.push_back(tables[n].coeffs[k]);
    Poly p = Poly::interpolate(std::span(nus).first(nodes), ys, Symbol::Nu);
    for (int n = nodes; n < levels; ++n) {
      if (p.eval(nus[n]) != tables[n].coeffs[k])
        throw ConsistencyError("degree bound " + std::to_string(nodes - 1) + " fails at order " +
                               std::to_string(k) + ", level " + std::to_string(n));
    }
    out.polys.push_back(std::move(p));
  }
  return out;
}

Series energy_series(const CoeffTable& table) {
  Series s(Rational(1), table.kmax() + 1);
  for (int k = 0; k <= table.kmax(); ++k) s.set(k, table.coeffs[k]);
  return s;
}

Series energy_series(const NuPolyTable& table) {
  Series s(Rational(1), table.kmax() + 1, Coupling::G, Symbol::Nu);
  for (int k = 0; k <= table.kmax(); ++k) s.set(k, table.polys[k]);
  return s;
}

std::string to_csv(const CoeffTable& table) {
  std::ostringstream os;
  os << "K,numerator,denominator\n";
  for (int k = 0; k <= table.kmax(); ++k)
    os << k << ',' << boost::multiprecision::numerator(table.coeffs[k]) << ','
       << boost::multiprecision::denominator(table.coeffs[k]) << '\n';
  return os.str();
}

nlohmann::json to_json(const CoeffTable& table) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : table.coeffs) coeffs.push_back(to_string(c));
  return {{"degree", table.spec.m()}, {"level", table.n}, {"kmax", table.kmax()}, {"coeffs", coeffs}};
}

CoeffTable coeff_table_from_json(const nlohmann::json& j) {
  CoeffTable t{OscillatorSpec(j.at("degree").get<int>()), j.at("level").get<int>(), {}};
  for (const auto& c : j.at("coeffs")) t.coeffs.push_back(parse_rational(c.get<std::string>()));
  if (t.kmax() != j.at("kmax").get<int>()) throw std::invalid_argument("coefficient table length mismatch");
  return t;
}

} // namespace anharmonic
