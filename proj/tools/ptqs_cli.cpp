// ptqs_cli.cpp - command-line front end. Four verbs:
//   spectrum       eigensystem and derived operators for one parameter set
//   probabilities  conserved transition probabilities over a time grid
//   neutrino-scan  survival/appearance curve over a baseline grid
//   verify         run the oracle suite and print one report per check
// Exit codes: 0 success, 1 configuration error, 2 physics-domain error
// (broken or exceptional phase, reality-bound violation, failed verify).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptqs/errors.hpp"
#include "ptqs/neutrino.hpp"
#include "ptqs/oracle.hpp"
#include "ptqs/pt.hpp"
#include "ptqs/transitions.hpp"

namespace {

using nlohmann::ordered_json;
using ptqs::ConfigError;
using ptqs::linalg::Complex;
using ptqs::linalg::ComplexMat2;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::size_t kVerifyDraws = 1000;
constexpr std::uint64_t kVerifySeed = 20240817u;

// All values are kept as strings until a command interprets them, so that
// angle expressions stay intact and flags can override file entries
// verbatim.
using KeyValues = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Strict double: the whole token must parse.
double parse_number(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x))
    throw ConfigError("config key '" + key + "': not a number: '" + value + "'");
  return x;
}

long parse_count(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const long n = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError("config key '" + key + "': not an integer: '" + value + "'");
  return n;
}

// Angles are plain radians or fractions of pi: "pi", "-pi/4", "2*pi/3",
// "2pi", "pi/6".
double parse_angle(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  const auto pos = v.find("pi");
  if (pos == std::string::npos) return parse_number(key, v);

  double sign = 1.0;
  std::string head = trim(v.substr(0, pos));
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    if (head.front() == '-') sign = -1.0;
    head = trim(head.substr(1));
  }
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  const double coef = head.empty() ? 1.0 : parse_number(key, head);

  std::string tail = trim(v.substr(pos + 2));
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw ConfigError("config key '" + key + "': bad angle syntax: '" + value + "'");
    den = parse_number(key, trim(tail.substr(1)));
    if (den == 0.0)
      throw ConfigError("config key '" + key + "': zero denominator: '" + value + "'");
  }
  return sign * coef * kPi / den;
}

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  KeyValues kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = val;
  }
  return kv;
}

// Merged view of config file and command-line overrides; flags win.
struct Settings {
  KeyValues values;

  bool has(const std::string& key) const { return values.count(key) != 0; }

  double number(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : parse_number(key, it->second);
  }

  double angle(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : parse_angle(key, it->second);
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
};

std::vector<double> parse_grid(const std::string& spec) {
  std::istringstream in(spec);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
      !std::getline(in, c))
    throw ConfigError("config key 'grid': expected start:stop:count, got '" +
                      spec + "'");
  const double start = parse_number("grid", a);
  const double stop = parse_number("grid", b);
  const long count = parse_count("grid", c);
  if (count < 1) throw ConfigError("config key 'grid': count must be >= 1");
  if (count > 1 && stop <= start)
    throw ConfigError("config key 'grid': grid must be increasing");
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] =
        count == 1 ? start
                   : start + (stop - start) * static_cast<double>(i) /
                                 static_cast<double>(count - 1);
  return grid;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Output sink: --out path or standard output.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void require_format(const std::string& format) {
  if (format != "csv" && format != "json")
    throw ConfigError("config key 'format': must be csv or json, got '" +
                      format + "'");
}

void require_keys(const Settings& s, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : s.values) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known)
      throw ConfigError("config key '" + key +
                        "' is not used by this command");
  }
}

void push_matrix(ordered_json& obj, const std::string& name,
                 const ComplexMat2& m) {
  obj[name] = {{m.e00.real(), m.e00.imag()}, {m.e01.real(), m.e01.imag()},
               {m.e10.real(), m.e10.imag()}, {m.e11.real(), m.e11.imag()}};
}

void print_matrix_csv(std::ostream& os, const std::string& name,
                      const ComplexMat2& m) {
  const Complex entries[4] = {m.e00, m.e01, m.e10, m.e11};
  const char* tags[4] = {"00", "01", "10", "11"};
  for (int i = 0; i < 4; ++i) {
    os << name << '_' << tags[i] << "_re," << fmt(entries[i].real()) << '\n';
    os << name << '_' << tags[i] << "_im," << fmt(entries[i].imag()) << '\n';
  }
}

ptqs::pt::PTParams params_from(const Settings& s) {
  return {s.number("rho", 0.0), s.number("sigma", 0.0),
          s.angle("varphi", 0.0)};
}

int cmd_spectrum(const Settings& s) {
  require_keys(s, {"format", "out", "rho", "sigma", "varphi"});
  const ptqs::pt::PTParams p = params_from(s);
  const ComplexMat2 H = ptqs::pt::build_general_hamiltonian(p);
  const ptqs::pt::SpectralData spec = ptqs::pt::spectral_decompose(H, p);
  const ptqs::pt::PTPhase phase = ptqs::pt::classify_phase(p);
  const bool hermitian = p.rho * std::sin(p.varphi) == 0.0;

  const std::string format = s.text("format", "csv");
  require_format(format);
  Sink sink(s.text("out", ""));
  std::ostream& os = sink.stream();

  if (format == "json") {
    ordered_json obj;
    obj["E_plus"] = spec.E_plus;
    obj["E_minus"] = spec.E_minus;
    obj["alpha"] = spec.alpha;
    obj["beta"] = spec.beta;
    obj["phase"] = ptqs::pt::to_string(phase.tag);
    obj["discriminant"] = phase.discriminant;
    if (hermitian) obj["note"] = "Hermitian limit";
    push_matrix(obj, "eta_plus", spec.eta_plus);
    push_matrix(obj, "c_op", spec.C);
    push_matrix(obj, "g_map", spec.G);
    push_matrix(obj, "h_prime", spec.H_prime);
    os << obj.dump(2) << '\n';
  } else {
    os << "quantity,value\n";
    os << "E_plus," << fmt(spec.E_plus) << '\n';
    os << "E_minus," << fmt(spec.E_minus) << '\n';
    os << "alpha," << fmt(spec.alpha) << '\n';
    os << "beta," << fmt(spec.beta) << '\n';
    os << "phase," << ptqs::pt::to_string(phase.tag) << '\n';
    os << "discriminant," << fmt(phase.discriminant) << '\n';
    if (hermitian) os << "note,Hermitian limit\n";
    print_matrix_csv(os, "eta_plus", spec.eta_plus);
    print_matrix_csv(os, "c_op", spec.C);
    print_matrix_csv(os, "g_map", spec.G);
    print_matrix_csv(os, "h_prime", spec.H_prime);
  }
  return 0;
}

int cmd_probabilities(const Settings& s) {
  require_keys(s, {"format", "out", "grid", "rho", "sigma", "varphi"});
  namespace tr = ptqs::transitions;
  const ptqs::pt::PTParams p = params_from(s);
  const ComplexMat2 H = ptqs::pt::build_general_hamiltonian(p);
  const ptqs::pt::SpectralData spec = ptqs::pt::spectral_decompose(H, p);

  std::vector<double> grid;
  if (s.has("grid")) {
    grid = parse_grid(s.text("grid", ""));
  } else {
    if (spec.beta <= 0.0)
      throw ConfigError(
          "default time grid spans one period, which is undefined for "
          "beta = 0; pass --grid start:stop:count");
    const double period = 2.0 * kPi / spec.beta;
    grid.resize(257);
    for (int i = 0; i < 257; ++i)
      grid[static_cast<std::size_t>(i)] =
          period * static_cast<double>(i) / 256.0;
  }

  const std::string format = s.text("format", "csv");
  require_format(format);
  Sink sink(s.text("out", ""));
  std::ostream& os = sink.stream();

  ordered_json rows = ordered_json::array();
  if (format == "csv")
    os << "t,P_aa,P_ab,P_ba,P_bb,row_sum_a,row_sum_b,delta_T\n";
  for (double t : grid) {
    const double paa =
        tr::probability_cpt(spec, tr::Flavor::A, tr::Flavor::A, t).probability;
    const double pab =
        tr::probability_cpt(spec, tr::Flavor::A, tr::Flavor::B, t).probability;
    const double pba =
        tr::probability_cpt(spec, tr::Flavor::B, tr::Flavor::A, t).probability;
    const double pbb =
        tr::probability_cpt(spec, tr::Flavor::B, tr::Flavor::B, t).probability;
    const double delta_t = tr::asymmetries(spec, t).delta_T;
    if (format == "json") {
      rows.push_back({t, paa, pab, pba, pbb, paa + pab, pba + pbb, delta_t});
    } else {
      os << fmt(t) << ',' << fmt(paa) << ',' << fmt(pab) << ',' << fmt(pba)
         << ',' << fmt(pbb) << ',' << fmt(paa + pab) << ',' << fmt(pba + pbb)
         << ',' << fmt(delta_t) << '\n';
    }
  }
  if (format == "json") {
    ordered_json obj;
    obj["columns"] = {"t",      "P_aa",      "P_ab",      "P_ba",
                      "P_bb",   "row_sum_a", "row_sum_b", "delta_T"};
    obj["rows"] = rows;
    os << obj.dump(2) << '\n';
  }
  return 0;
}

int cmd_neutrino_scan(const Settings& s) {
  require_keys(s, {"format", "out", "grid", "dm2", "m2_bar", "rho", "sigma",
                   "varphi", "energy", "alpha_prime"});
  namespace nu = ptqs::neutrino;
  nu::OscillationConfig cfg;
  cfg.delta_m2_32 = s.number("dm2", cfg.delta_m2_32);
  cfg.m2_bar = s.number("m2_bar", cfg.m2_bar);
  cfg.rho = s.number("rho", cfg.rho);
  cfg.sigma = s.number("sigma", cfg.sigma);
  cfg.varphi = s.angle("varphi", cfg.varphi);
  cfg.energy = s.number("energy", cfg.energy);
  if (s.has("grid")) cfg.baselines = parse_grid(s.text("grid", ""));

  // One curve per invocation: either the phase shift is fixed directly or
  // it is derived from (rho, varphi, sigma).
  nu::ProbabilityCurve curve;
  if (s.has("alpha_prime")) {
    curve = nu::curve_for_alpha_prime(cfg, s.angle("alpha_prime", 0.0));
  } else {
    cfg.validate();
    curve.baseline_km = cfg.baselines;
    for (double L : cfg.baselines) {
      const double p = nu::survival_probability(cfg, L);
      curve.p_mumu.push_back(p);
      curve.p_mutau.push_back(1.0 - p);
    }
  }

  const std::string format = s.text("format", "csv");
  require_format(format);
  Sink sink(s.text("out", ""));
  std::ostream& os = sink.stream();

  if (format == "json") {
    ordered_json obj;
    obj["columns"] = {"L_km", "P_mumu", "P_mutau"};
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < curve.baseline_km.size(); ++i)
      rows.push_back(
          {curve.baseline_km[i], curve.p_mumu[i], curve.p_mutau[i]});
    obj["rows"] = rows;
    os << obj.dump(2) << '\n';
  } else {
    os << "L_km,P_mumu,P_mutau\n";
    for (std::size_t i = 0; i < curve.baseline_km.size(); ++i)
      os << fmt(curve.baseline_km[i]) << ',' << fmt(curve.p_mumu[i]) << ','
         << fmt(curve.p_mutau[i]) << '\n';
  }
  return 0;
}

int cmd_verify(const Settings& s) {
  require_keys(s, {"format", "out"});
  std::optional<double> tolerance;
  if (const char* env = std::getenv("PTQS_TOLERANCE")) {
    tolerance = parse_number("PTQS_TOLERANCE", env);
    if (*tolerance <= 0.0)
      throw ConfigError("PTQS_TOLERANCE must be positive");
  }
  const auto reports =
      ptqs::oracle::run_verification_suite(kVerifyDraws, kVerifySeed, tolerance);

  const std::string format = s.text("format", "csv");
  require_format(format);
  Sink sink(s.text("out", ""));
  std::ostream& os = sink.stream();

  bool all_pass = true;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back({{"name", r.name},
                     {"primary", r.primary},
                     {"oracle", r.oracle},
                     {"difference", r.difference},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      os << ptqs::oracle::to_line(r) << '\n';
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-level PT-symmetric quantum system toolkit"};
  app.require_subcommand(1);

  // Every subcommand shares the same option surface; each command reads
  // the keys it understands.
  struct Raw {
    std::string config, format, out, grid;
    std::string rho, sigma, varphi, dm2, energy, alpha_prime;
  };
  auto add_common = [](CLI::App* cmd, Raw& raw) {
    cmd->add_option("--config", raw.config, "flat key = value config file");
    cmd->add_option("--format", raw.format, "output format: csv or json");
    cmd->add_option("--out", raw.out, "output path (default: stdout)");
    cmd->add_option("--grid", raw.grid, "evaluation grid start:stop:count");
    cmd->add_option("--rho", raw.rho, "diagonal magnitude");
    cmd->add_option("--sigma", raw.sigma, "off-diagonal coupling");
    cmd->add_option("--varphi", raw.varphi,
                    "diagonal phase (radians or pi fraction)");
    cmd->add_option("--dm2", raw.dm2, "mass-squared splitting, eV^2");
    cmd->add_option("--energy", raw.energy, "beam energy, GeV");
    cmd->add_option("--alpha-prime", raw.alpha_prime,
                    "fixed phase-shift angle (radians or pi fraction)");
  };

  Raw raw_spectrum, raw_prob, raw_scan, raw_verify;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "eigensystem and derived operators");
  add_common(spectrum, raw_spectrum);
  CLI::App* probabilities = app.add_subcommand(
      "probabilities", "conserved transition probabilities over time");
  add_common(probabilities, raw_prob);
  CLI::App* scan = app.add_subcommand(
      "neutrino-scan", "survival/appearance curve over baselines");
  add_common(scan, raw_scan);
  CLI::App* verify =
      app.add_subcommand("verify", "run the oracle cross-check suite");
  add_common(verify, raw_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto settings_for = [](const Raw& raw) {
    Settings s;
    if (!raw.config.empty()) s.values = parse_config_file(raw.config);
    const std::pair<const char*, const std::string*> overrides[] = {
        {"format", &raw.format},   {"out", &raw.out},
        {"grid", &raw.grid},       {"rho", &raw.rho},
        {"sigma", &raw.sigma},     {"varphi", &raw.varphi},
        {"dm2", &raw.dm2},         {"energy", &raw.energy},
        {"alpha_prime", &raw.alpha_prime}};
    for (const auto& [key, value] : overrides)
      if (!value->empty()) s.values[key] = *value;
    return s;
  };

  try {
    if (spectrum->parsed()) return cmd_spectrum(settings_for(raw_spectrum));
    if (probabilities->parsed())
      return cmd_probabilities(settings_for(raw_prob));
    if (scan->parsed()) return cmd_neutrino_scan(settings_for(raw_scan));
    if (verify->parsed()) return cmd_verify(settings_for(raw_verify));
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ptqs::BrokenPhase& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ptqs::ExceptionalPoint& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ptqs::UnbrokenViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ptqs::NotSymmetric& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ptqs::NonPositiveProduct& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
