#include "anharmonic/cli.hpp"

#include "anharmonic/acceptance.hpp"
#include "anharmonic/borel.hpp"
#include "anharmonic/cache.hpp"
#include "anharmonic/hamiltonian.hpp"
#include "anharmonic/instanton.hpp"
#include "anharmonic/largeorder.hpp"
#include "anharmonic/quantize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace anharmonic {

namespace mp = boost::multiprecision;
using nlohmann::json;

namespace {

constexpr int kOutputSchema = 1;

struct RunConfig {
  std::string command;
  int degree = 4;
  int level = 0;
  std::string g = "0";
  std::vector<std::string> g_list;
  std::string g_from, g_to;
  int g_steps = 0;
  int kmax = 20;
  std::optional<int> order;
  int moment_k = 10;
  unsigned precision = kDefaultDigits;
  bool precision_set = false;
  std::string format = "json";
  std::string cache_dir;
  std::vector<std::string> thetas;
  std::vector<int> dims;
  std::string direction = "0";
  std::string t_from = "-5", t_to = "5", t0 = "0";
  int points = 101;
  int branch = 1;
  std::string suite = "fast";
  std::vector<int> criteria;
};

json config_json(const RunConfig& c) {
  json j = {{"command", c.command},   {"degree", c.degree}, {"level", c.level},       {"g", c.g},
            {"kmax", c.kmax},         {"k", c.moment_k},    {"precision", c.precision}, {"format", c.format},
            {"direction", c.direction}, {"suite", c.suite}, {"points", c.points},     {"branch", c.branch},
            {"t_from", c.t_from},     {"t_to", c.t_to},     {"t0", c.t0},             {"thetas", c.thetas},
            {"dims", c.dims},         {"criteria", c.criteria}};
  j["order"] = c.order ? json(*c.order) : json(nullptr);
  j["g_list"] = c.g_list;
  j["g_ladder"] = c.g_steps > 0 ? json{{"from", c.g_from}, {"to", c.g_to}, {"steps", c.g_steps}} : json(nullptr);
  j["cache_dir"] = c.cache_dir.empty() ? json(nullptr) : json(c.cache_dir);
  return j;
}

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

json exact(const Rational& q) { return {{"value", to_string(q)}, {"provenance", "exact"}}; }

json numeric(const Real& x, unsigned digits, std::optional<Real> error = std::nullopt) {
  json p = {{"kind", "numeric"}, {"precision", digits}};
  p["error"] = error ? json(format(*error, 3)) : json(nullptr);
  return {{"value", format(x, static_cast<int>(digits))}, {"provenance", p}};
}

json fixture(const std::string& value, const std::string& source) {
  return {{"value", value}, {"provenance", {{"kind", "fixture"}, {"source", source}}}};
}

void emit(std::ostream& out, const RunConfig& cfg, const json& result) {
  json doc = {{"schema", kOutputSchema}, {"command", cfg.command}, {"config", config_json(cfg)},
              {"result", result},        {"timestamp", timestamp()}};
  out << doc.dump(2) << '\n';
}

Real parse_real(const std::string& s) {
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

std::optional<TableCache> open_cache(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return TableCache(cfg.cache_dir);
  return TableCache::from_environment();
}

CoeffTable table_for(const RunConfig& cfg, int kmax, std::ostream& err) {
  auto cache = open_cache(cfg);
  std::vector<std::string> warnings;
  auto t = cached_rspt_coeffs(cache ? &*cache : nullptr, OscillatorSpec(cfg.degree), cfg.level, kmax, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return t;
}

int borel_index(const OscillatorSpec& spec) { return spec.odd() ? spec.m() - 2 : (spec.m() - 2) / 2; }

std::vector<Real> coupling_ladder(const RunConfig& cfg) {
  std::vector<Real> gs;
  for (const auto& s : cfg.g_list) gs.push_back(parse_real(s));
  if (cfg.g_steps > 0) {
    Real a = parse_real(cfg.g_from), b = parse_real(cfg.g_to);
    for (int i = 0; i < cfg.g_steps; ++i) gs.push_back(cfg.g_steps == 1 ? a : a + (b - a) * i / (cfg.g_steps - 1));
  }
  if (gs.empty()) throw std::invalid_argument("no couplings given (use --g or --g-from/--g-to/--g-steps)");
  return gs;
}

ResonanceOptions resonance_options(const RunConfig& cfg) {
  ResonanceOptions o;
  for (const auto& t : cfg.thetas) o.thetas.push_back(parse_real(t));
  o.dims = cfg.dims;
  if (cfg.precision_set) o.digits = cfg.precision;
  return o;
}

json resonance_json(const ResonanceResult& r) {
  const int d = static_cast<int>(r.digits);
  return {{"re", format(r.energy.re, d)},
          {"im", format(r.energy.im, d)},
          {"err", format(r.error, 3)},
          {"theta", format(r.theta, 6)},
          {"dim", r.dim},
          {"precision", r.digits},
          {"provenance", {{"kind", "numeric"}, {"precision", r.digits}, {"error", format(r.error, 3)}}}};
}

json table_json(const std::vector<ResonanceCell>& table) {
  json rows = json::array();
  for (const auto& c : table)
    rows.push_back({{"theta", format(c.theta, 6)},
                    {"dim", c.dim},
                    {"converged", c.converged},
                    {"re", format(c.energy.re, 20)},
                    {"im", format(c.energy.im, 20)}});
  return rows;
}

// --- subcommands --------------------------------------------------------------

int cmd_rspt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto t = table_for(cfg, cfg.kmax, err);
  if (cfg.format == "csv") {
    out << to_csv(t);
    return 0;
  }
  json coeffs = json::array();
  for (const auto& c : t.coeffs) coeffs.push_back(exact(c));
  emit(out, cfg, {{"degree", cfg.degree}, {"level", cfg.level}, {"kmax", t.kmax()}, {"coeffs", coeffs}});
  return 0;
}

int cmd_bfun(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto b = b_function(OscillatorSpec(cfg.degree), cfg.order.value_or(2));
  emit(out, cfg,
       {{"degree", cfg.degree},
        {"order", b.order()},
        {"series", to_json(b.series)},
        {"text", to_string(b.series)},
        {"provenance", "exact"}});
  return 0;
}

int cmd_afun(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto a = a_fixture(cfg.degree);
  const unsigned p = working_digits();
  json sources = a.provenance;
  emit(out, cfg,
       {{"degree", cfg.degree},
        {"leading", numeric(a.leading, p)},
        {"printed_leading", fixture(format(a.printed_leading, static_cast<int>(p)),
                                    a.provenance.empty() ? std::string("tabulated") : a.provenance.front())},
        {"leading_discrepancy", a.leading_discrepancy()},
        {"leading_ratio", numeric(a.leading_ratio(), p)},
        {"corrections", {{"series", to_json(a.corrections)}, {"text", to_string(a.corrections)},
                         {"provenance", {{"kind", "fixture"}, {"source", sources}}}}},
        {"scale", numeric(a.scale, p)},
        {"scale_expression", a.scale_expression}});
  return 0;
}

int cmd_action(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const unsigned p = working_digits();
  auto q = action_quadrature(cfg.degree, p, parse_real(cfg.t0));
  const Real closed = action_closed_form(cfg.degree);
  const Real dev = mp::abs(q.value / closed - 1);
  const int agree = dev == 0 ? static_cast<int>(p) : std::min<int>(static_cast<int>(p), static_cast<int>(
                                                                                            mp::floor(-mp::log10(dev)).convert_to<long>()));
  auto rational = action_rational(cfg.degree);
  emit(out, cfg,
       {{"degree", cfg.degree},
        {"closed_form", numeric(closed, p)},
        {"rational", rational ? exact(*rational) : json(nullptr)},
        {"quadrature", numeric(q.value, p, q.error)},
        {"agreement_digits", agree},
        {"prefactor_constant", numeric(prefactor_constant(cfg.degree), p)}});
  return 0;
}

int cmd_width(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OscillatorSpec spec(cfg.degree);
  const Real g = parse_real(cfg.g);
  const unsigned p = working_digits();
  const Real lead = width_leading(spec, cfg.level, g);
  json result = {{"degree", cfg.degree}, {"level", cfg.level}, {"g", cfg.g}, {"leading", numeric(lead, p)}};
  const int top = max_width_order(cfg.degree);
  const int order = std::min(cfg.order.value_or(top), top);
  if (order > 0) {
    auto w = one_instanton_width_series(spec, cfg.level, order);
    result["corrected"] = numeric(w.eval(g), p);
    result["corrected"]["order"] = order;
  }
  emit(out, cfg, result);
  return 0;
}

int cmd_width_series(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OscillatorSpec spec(cfg.degree);
  auto w = one_instanton_width_series(spec, cfg.level, cfg.order.value_or(max_width_order(cfg.degree)));
  const unsigned p = working_digits();
  json c = json::array();
  for (const auto& x : w.c) c.push_back(exact(x));
  emit(out, cfg,
       {{"degree", cfg.degree},
        {"level", cfg.level},
        {"order", w.order()},
        {"c", c},
        {"scale", numeric(w.scale, p)},
        {"scale_expression", w.scale_expression},
        {"variable", w.variable == Coupling::G ? "g" : "-g"},
        {"lattice_step", exact(w.lattice_step)},
        {"action", numeric(w.action, p)},
        {"prefactor_power", exact(w.prefactor_power)},
        {"prefactor_constant", numeric(w.prefactor_constant, p)}});
  return 0;
}

int cmd_largeorder(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  OscillatorSpec spec(cfg.degree);
  auto t = table_for(cfg, cfg.kmax, err);
  auto d = ratio_diagnostics(t, [&](int K) { return leading_coefficient(spec, cfg.level, K); });
  if (cfg.format == "csv") {
    out << "K,coefficient,predictor,ratio\n";
    for (const auto& pt : d.points)
      out << pt.K << ',' << format(pt.coefficient, 20) << ',' << format(pt.predictor, 20) << ','
          << format(pt.ratio, 20) << '\n';
    return 0;
  }
  json rows = json::array();
  for (const auto& pt : d.points)
    rows.push_back({{"K", pt.K},
                    {"coefficient", exact(t.coeffs[pt.K])},
                    {"predictor", numeric(pt.predictor, working_digits())},
                    {"ratio", format(pt.ratio, 20)}});
  emit(out, cfg,
       {{"points", rows},
        {"fit", {{"k_lo", d.fit.k_lo}, {"k_hi", d.fit.k_hi}, {"a", format(d.fit.a, 12)},
                 {"a_error", format(d.fit.a_error, 3)}, {"model", "ratio - 1 = a/K, weights K^2"}}}});
  return 0;
}

int cmd_dispersion(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OscillatorSpec spec(cfg.degree);
  const unsigned p = working_digits();
  auto q = dispersion_moment(spec, cfg.level, cfg.moment_k, p);
  const Real closed = mp::abs(leading_coefficient(spec, cfg.level, cfg.moment_k));
  emit(out, cfg,
       {{"degree", cfg.degree},
        {"level", cfg.level},
        {"K", cfg.moment_k},
        {"moment", numeric(q.value, p, q.error)},
        {"closed_form", numeric(closed, p)},
        {"relative_deviation", format(mp::abs(q.value / closed - 1), 3)}});
  return 0;
}

int cmd_resonance(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto r = resonance(OscillatorSpec(cfg.degree), cfg.level, parse_real(cfg.g), resonance_options(cfg));
  emit(out, cfg, resonance_json(r));
  return 0;
}

int cmd_resonance_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OscillatorSpec spec(cfg.degree);
  const auto gs = coupling_ladder(cfg);
  std::vector<ResonanceResult> rows;
  for (const auto& g : gs) rows.push_back(resonance(spec, cfg.level, g, resonance_options(cfg)));
  if (cfg.format == "csv") {
    out << "g,re,im,err,theta,dim,precision\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const int d = static_cast<int>(r.digits);
      out << format(gs[i], 12) << ',' << format(r.energy.re, d) << ',' << format(r.energy.im, d) << ','
          << format(r.error, 3) << ',' << format(r.theta, 6) << ',' << r.dim << ',' << r.digits << '\n';
    }
    return 0;
  }
  json list = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    json row = resonance_json(rows[i]);
    row["g"] = format(gs[i], 12);
    list.push_back(row);
  }
  emit(out, cfg, {{"scan", list}});
  return 0;
}

int cmd_borel(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  OscillatorSpec spec(cfg.degree);
  auto t = table_for(cfg, cfg.kmax, err);
  auto s = borel_pade(t.coeffs, borel_index(spec), parse_real(cfg.g), parse_real(cfg.direction));
  const int d = static_cast<int>(s.digits);
  emit(out, cfg,
       {{"re", format(s.value.re, d)},
        {"im", format(s.value.im, d)},
        {"err", format(s.error, 3)},
        {"beta", s.beta},
        {"coefficients", s.coefficients},
        {"pade", {s.pade_l, s.pade_m}},
        {"direction", format(s.direction, 6)},
        {"ray", format(s.ray, 6)},
        {"deflected", s.deflected},
        {"provenance", {{"kind", "numeric"}, {"precision", s.digits}, {"error", format(s.error, 3)}}}});
  return 0;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.points < 2) throw std::invalid_argument("--points must be at least 2");
  const Real g = parse_real(cfg.g), a = parse_real(cfg.t_from), b = parse_real(cfg.t_to);
  InstantonProfile prof{cfg.degree, parse_real(cfg.t0), cfg.branch};
  // chi is the scaled profile, U(chi) = chi^m - chi^2/2 the scaled potential it moves in.
  out << "t,q,chi,U\n";
  for (int i = 0; i < cfg.points; ++i) {
    Real t = a + (b - a) * i / (cfg.points - 1);
    Real chi = scaled_profile(cfg.degree, t - prof.t0);
    out << format(t, 12) << ',' << format(profile_eval(prof, t, g), 20) << ',' << format(chi, 20) << ','
        << format(scaled_potential(cfg.degree, chi), 20) << '\n';
  }
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  AcceptanceOptions o;
  o.suite = cfg.suite == "full" ? Suite::Full : Suite::Fast;
  auto cache = open_cache(cfg);
  if (cache) o.cache = &*cache;
  const bool text = cfg.format != "json";
  auto results = run_suite(o, cfg.criteria, [&](const CriterionResult& r) {
    if (!text) return;
    out << format_line(r) << '\n';
    for (const auto& n : r.notes) out << "        note: " << n << '\n';
    out.flush();
  });
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"measured", r.measured},
                    {"expected", r.expected}, {"notes", r.notes}});
  }
  if (text) {
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    out << passed << "/" << results.size() << " criteria passed\n";
  } else {
    emit(out, cfg, {{"criteria", rows}, {"all_pass", all}});
  }
  return all ? 0 : 1;
}

void error_json(std::ostream& out, const RunConfig& cfg, const std::string& type, const std::string& message,
                const json& extra = nullptr) {
  json doc = {{"schema", kOutputSchema}, {"command", cfg.command}, {"config", config_json(cfg)},
              {"error", {{"type", type}, {"message", message}}}, {"timestamp", timestamp()}};
  if (!extra.is_null()) doc["error"]["detail"] = extra;
  out << doc.dump(2) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Perturbative, instanton and numerical data for anharmonic oscillators", "anharmonic"};
  app.set_config("--config", "", "TOML file mirroring the command-line flags");
  app.require_subcommand(1, 1);

  auto degree = [&](CLI::App* s) {
    s->add_option("-m,--degree", cfg.degree, "degree m of the q^m perturbation (m >= 3)")
        ->check(CLI::Range(3, 40));
  };
  auto level = [&](CLI::App* s) { s->add_option("-n,--level", cfg.level, "oscillator level")->check(CLI::Range(0, 200)); };
  auto coupling = [&](CLI::App* s) { s->add_option("-g,--coupling", cfg.g, "coupling g (decimal string)")->required(); };
  std::map<CLI::App*, int> kmax_defaults;
  auto kmax = [&](CLI::App* s, int dflt) {
    kmax_defaults[s] = dflt;
    s->add_option("--kmax", cfg.kmax, "highest perturbative order (default " + std::to_string(dflt) + ")")
        ->check(CLI::Range(1, 2000));
  };
  auto fmt = [&](CLI::App* s, const std::string& dflt, std::vector<std::string> allowed) {
    s->add_option("--format", cfg.format, "output format (default " + dflt + ")")->check(CLI::IsMember(allowed));
  };
  auto order = [&](CLI::App* s, const std::string& what) { s->add_option("--order", cfg.order, what); };
  auto scan_grid = [&](CLI::App* s) {
    s->add_option("--theta", cfg.thetas, "rotation angles (radians); default 8 values in [0.1, 0.1+pi/(2(m+2))]");
    s->add_option("--dim", cfg.dims, "basis sizes; default 200 300 450")->check(CLI::Range(16, 100000));
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&, std::ostream&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    commands.emplace_back(s, handler);
    return s;
  };

  auto* rspt = add("rspt", "exact perturbative coefficients E_{n,K}", cmd_rspt);
  degree(rspt), level(rspt), kmax(rspt, 20);
  auto* bfun = add("bfun", "perturbative function B(E, g)", cmd_bfun);
  degree(bfun), order(bfun, "highest order in g (default 2)");
  auto* afun = add("afun", "tabulated instanton function A(E, g)", cmd_afun);
  degree(afun);
  auto* action = add("action", "instanton action: closed form and quadrature", cmd_action);
  degree(action);
  action->add_option("--t0", cfg.t0, "collective coordinate of the instanton");
  auto* width = add("width", "imaginary part of the energy at one-instanton order", cmd_width);
  degree(width), level(width), coupling(width), order(width, "correction order (default: all available)");
  auto* wseries = add("width-series", "exact corrections c_k of the one-instanton width", cmd_width_series);
  degree(wseries), level(wseries), order(wseries, "highest correction (default: all available)");
  auto* large = add("largeorder", "large-order ratios against the leading prediction", cmd_largeorder);
  degree(large), level(large), kmax(large, 40);
  auto* disp = add("dispersion", "dispersion-integral moment of the leading width", cmd_dispersion);
  degree(disp), level(disp);
  disp->add_option("-K,--k", cfg.moment_k, "moment order K")->check(CLI::Range(1, 2000));
  auto* res = add("resonance", "complex-scaling resonance energy", cmd_resonance);
  degree(res), level(res), coupling(res), scan_grid(res);
  auto* scan = add("resonance-scan", "complex-scaling resonances over a coupling ladder", cmd_resonance_scan);
  degree(scan), level(scan), scan_grid(scan);
  scan->add_option("--g", cfg.g_list, "couplings");
  scan->add_option("--g-from", cfg.g_from, "first coupling of an equally spaced ladder");
  scan->add_option("--g-to", cfg.g_to, "last coupling of the ladder");
  scan->add_option("--g-steps", cfg.g_steps, "number of ladder points")->check(CLI::Range(0, 100000));
  auto* borel = add("borel", "directional Borel-Pade sum of the perturbation series", cmd_borel);
  degree(borel), level(borel), coupling(borel), kmax(borel, 40);
  borel->add_option("--direction", cfg.direction, "argument of the Borel-plane ray (radians)");
  auto* prof = add("instanton-profile", "instanton trajectory q(t) as CSV", cmd_profile);
  degree(prof), coupling(prof);
  prof->add_option("--t-from", cfg.t_from, "first time");
  prof->add_option("--t-to", cfg.t_to, "last time");
  prof->add_option("--points", cfg.points, "number of samples");
  prof->add_option("--t0", cfg.t0, "collective coordinate");
  prof->add_option("--branch", cfg.branch, "+1 or -1 (even degrees)")->check(CLI::IsMember({-1, 1}));
  auto* check = add("check", "acceptance suite", cmd_check);
  check->add_option("--suite", cfg.suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  check->add_option("--criterion", cfg.criteria, "criterion ids (default: all)")->check(CLI::Range(1, 12));

  for (auto* s : {rspt, large, scan}) fmt(s, "csv", {"csv", "json"});
  fmt(check, "text", {"text", "json"});
  for (auto* s : {bfun, afun, action, width, wseries, disp, res, borel})
    s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json"}));

  for (auto& [s, h] : commands) {
    s->add_option("-P,--precision", cfg.precision, "working precision in decimal digits")
        ->check(CLI::Range(16, 2000))
        ->each([&](const std::string&) { cfg.precision_set = true; });
    s->add_option("--cache-dir", cfg.cache_dir, "directory for cached coefficient tables");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  int (*handler)(const RunConfig&, std::ostream&, std::ostream&) = nullptr;
  for (auto& [s, h] : commands) {
    if (s->parsed()) {
      cfg.command = s->get_name();
      handler = h;
      // Defaults that differ between commands are applied once the command is known.
      if (auto it = kmax_defaults.find(s); it != kmax_defaults.end() && s->get_option("--kmax")->count() == 0)
        cfg.kmax = it->second;
      auto* f = s->get_option_no_throw("--format");
      if (f && f->count() == 0) {
        if (s == rspt || s == large || s == scan) cfg.format = "csv";
        else if (s == check) cfg.format = "text";
        else cfg.format = "json";
      }
    }
  }

  try {
    PrecisionScope scope(cfg.precision);
    return handler(cfg, out, err);
  } catch (const NoPlateau& e) {
    error_json(out, cfg, "NoPlateau", e.what(), table_json(e.table()));
  } catch (const RegimeError& e) {
    error_json(out, cfg, "RegimeError", e.what());
  } catch (const FixtureError& e) {
    error_json(out, cfg, "FixtureError", e.what());
  } catch (const ConvergenceError& e) {
    error_json(out, cfg, "ConvergenceError", e.what());
  } catch (const Error& e) {
    error_json(out, cfg, "Error", e.what());
  } catch (const std::invalid_argument& e) {
    error_json(out, cfg, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    error_json(out, cfg, "Failure", e.what());
  }
  return 1;
}

} // namespace anharmonic
