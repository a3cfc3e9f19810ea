#include "pawclock/cli/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pawclock::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  return x;
}

long long parse_integer(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE)
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_real(key, item));
  }
  return out;
}

const ConfigKey* find_key(const std::string& name) {
  for (const auto& k : ExperimentConfig::schema())
    if (k.name == name) return &k;
  return nullptr;
}

}  // namespace

const std::vector<ConfigKey>& ExperimentConfig::schema() {
  using K = KeyKind;
  static const std::vector<ConfigKey> keys = {
      {"algebra", "su2", K::text, "su2 | h4 | su11"},
      {"j", "10", K::real, "clock spin for su2 experiments"},
      {"ncut", "128", K::integer, "Fock cutoff for h4 and su11"},
      {"bargmann_k", "0.5", K::real, "Bargmann index for su11"},
      {"rho", "0.6", K::real, "clock coherent radius"},
      {"phi", "0.3", K::real, "clock coherent angle"},
      {"h", "1e-3", K::real, "finite-difference step in phi"},
      {"rho_max", "1.2", K::real, "upper end of rho grids"},
      {"n_rho", "20", K::integer, "rho grid points"},
      {"n_phi", "20", K::integer, "phi grid points"},
      {"profile", "gaussian", K::text, "gaussian | equal | random"},
      {"width", "2", K::real, "Gaussian profile width in units of epsilon"},
      {"system_levels", "", K::list, "system spectrum in units of epsilon (empty: copy of the clock)"},
      {"seed", "0", K::integer, "seed for the random profile"},
      {"h4_fill", "0.0625", K::real, "h4 sweeps use rho^2 = h4_fill * ncut"},
      {"algebra_j", "0.5,1,1.5,2,5,10,25,50", K::list, "su2 spins checked by verify-algebra"},
      {"algebra_ncut", "8,32,64,128,256", K::list, "h4 cutoffs checked by verify-algebra"},
      {"bch_j", "0.5,2,10,25", K::list, "su2 spins checked by bch-check"},
      {"identity_j", "0.5,1,2,3,5", K::list, "su2 spins checked by identity-resolution"},
      {"identity_ncut", "64", K::integer, "h4 cutoff checked by identity-resolution"},
      {"sweep_j", "5,10,20,40", K::list, "su2 clock sizes for sweeps"},
      {"sweep_ncut", "64,128,256,512", K::list, "h4 clock sizes for sweeps"},
      {"classical_j", "5,10,20", K::list, "joint j_C = j_Gamma sweep"},
      {"phase_j", "20", K::real, "spin for the commutator check"},
      {"audit_j", "15", K::real, "spin for the uncertainty audit"},
      {"expect_rho", "0.4", K::real, "rho for the phase expectation sweep"},
      {"expect_phi", "0.9", K::real, "phi for the phase expectation sweep"},
      {"support_threshold", "1e-6", K::real, "beta support threshold relative to the maximum"},
      {"hbar", "1", K::real, "Darboux constant"},
      {"tol.cartan", "1e-12", K::tolerance, "Cartan relation residuals"},
      {"tol.bch", "1e-10", K::tolerance, "displacement vs normal form"},
      {"tol.symbol", "1e-10", K::tolerance, "su2 clock symbol, absolute"},
      {"tol.symbol_rel", "1e-8", K::tolerance, "h4 and su11 clock symbol, relative"},
      {"tol.identity", "1e-8", K::tolerance, "su2 identity resolution"},
      {"tol.identity_h4", "1e-6", K::tolerance, "h4 identity resolution on the valid block"},
      {"tol.constraint", "1e-10", K::tolerance, "||H Psi|| and state norms"},
      {"tol.chi2", "1e-12", K::tolerance, "chi2 identities and phi drift"},
      {"tol.precs", "1e-8", K::tolerance, "reduced density reconstruction"},
      {"tol.slope", "0.1", K::tolerance, "Richardson slope deviation from 2"},
      {"tol.propagator", "1e-9", K::tolerance, "conditional state vs propagator"},
      {"tol.commutator", "1e-10", K::tolerance, "interior phase commutator"},
      {"tol.unitarity", "1e-12", K::tolerance, "phase operator unitarity"},
      {"tol.slack", "1e-12", K::tolerance, "allowed negative uncertainty slack"},
      {"tol.small_angle", "0.05", K::tolerance, "small-phi energy-time linearization"},
      {"tol.normalization", "1e-6", K::tolerance, "beta normalization"},
      {"tol.pullback", "1e-10", K::tolerance, "pullback two-form"},
      {"tol.hamilton", "1e-10", K::tolerance, "Hamilton identity, analytic partials"},
      {"tol.hamilton_fd", "1e-6", K::tolerance, "Hamilton identity, finite differences"},
      {"tol.time", "1e-10", K::tolerance, "quantum vs classical time rate"},
      {"out", "pawclock_out", K::text, "output root", true},
      {"run_id", "", K::text, "output subdirectory (default: UTC timestamp)", true},
      {"jobs", "0", K::integer, "worker threads (0: runtime default)", true},
  };
  return keys;
}

ExperimentConfig::ExperimentConfig() {
  for (const auto& k : schema()) values_[k.name] = k.default_value;
}

void ExperimentConfig::set(const std::string& key_in, const std::string& value) {
  const std::string key = trim(key_in);
  if (!find_key(key)) throw ConfigError("config: unknown key '" + key + "'");
  values_[key] = trim(value);
  explicit_[key] = true;
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: " + path + ":" + std::to_string(lineno) + ": expected key = value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void ExperimentConfig::set_tolerance_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--tol-override expects KEY=VAL, got '" + assignment + "'");
  std::string key = trim(assignment.substr(0, eq));
  if (key.rfind("tol.", 0) != 0) key = "tol." + key;
  const ConfigKey* k = find_key(key);
  if (!k || k->kind != KeyKind::tolerance) throw ConfigError("--tol-override: unknown tolerance '" + key + "'");
  set(key, assignment.substr(eq + 1));
}

const std::string& ExperimentConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("config: unknown key '" + key + "'");
  return it->second;
}

double ExperimentConfig::real(const std::string& key) const { return parse_real(key, text(key)); }

int ExperimentConfig::integer(const std::string& key) const {
  const long long x = parse_integer(key, text(key));
  if (x < -2147483647LL || x > 2147483647LL) throw ConfigError("config: '" + key + "' out of range");
  return static_cast<int>(x);
}

std::vector<double> ExperimentConfig::list(const std::string& key) const { return parse_list(key, text(key)); }

std::uint64_t ExperimentConfig::seed() const {
  const long long s = parse_integer("seed", text("seed"));
  if (s < 0) throw ConfigError("config: seed must be >= 0");
  return static_cast<std::uint64_t>(s);
}

std::map<std::string, double> ExperimentConfig::tolerances() const {
  std::map<std::string, double> out;
  for (const auto& k : schema())
    if (k.kind == KeyKind::tolerance) out[k.name.substr(4)] = real(k.name);
  return out;
}

void ExperimentConfig::validate() const {
  for (const auto& k : schema()) {
    const std::string& v = text(k.name);
    switch (k.kind) {
      case KeyKind::real: parse_real(k.name, v); break;
      case KeyKind::integer: parse_integer(k.name, v); break;
      case KeyKind::list: parse_list(k.name, v); break;
      case KeyKind::tolerance:
        if (!(parse_real(k.name, v) > 0.0)) throw ConfigError("config: tolerance '" + k.name + "' must be > 0");
        break;
      case KeyKind::text: break;
    }
  }
  const std::string& alg = text("algebra");
  if (alg != "su2" && alg != "h4" && alg != "su11")
    throw ConfigError("config: algebra must be su2, h4 or su11, got '" + alg + "'");
  const std::string& prof = text("profile");
  if (prof != "gaussian" && prof != "equal" && prof != "random")
    throw ConfigError("config: profile must be gaussian, equal or random, got '" + prof + "'");

  auto positive = [&](const char* key) {
    if (!(real(key) > 0.0)) throw ConfigError(std::string("config: '") + key + "' must be > 0");
  };
  for (const char* key : {"j", "h", "rho_max", "width", "h4_fill", "phase_j", "audit_j", "support_threshold", "hbar",
                          "bargmann_k"})
    positive(key);
  if (real("rho") < 0.0) throw ConfigError("config: 'rho' must be >= 0");
  for (const char* key : {"ncut", "n_rho", "n_phi", "identity_ncut"})
    if (integer(key) < 2) throw ConfigError(std::string("config: '") + key + "' must be >= 2");
  for (const char* key : {"algebra_j", "algebra_ncut", "bch_j", "identity_j"}) {
    if (list(key).empty()) throw ConfigError(std::string("config: grid '") + key + "' is empty");
  }
  for (const char* key : {"sweep_j", "sweep_ncut", "classical_j"})
    if (list(key).size() < 3) throw ConfigError(std::string("config: sweep '") + key + "' needs at least 3 sizes");
  for (const char* key : {"algebra_j", "bch_j", "identity_j", "sweep_j", "classical_j"})
    for (double j : list(key))
      if (!(j > 0.0) || std::abs(2.0 * j - std::round(2.0 * j)) > 1e-12)
        throw ConfigError(std::string("config: '") + key + "' entries must be positive half-integers");
  seed();
  if (integer("jobs") < 0) throw ConfigError("config: 'jobs' must be >= 0");
  const std::string& run_id = text("run_id");
  if (run_id.find('/') != std::string::npos || run_id == "." || run_id == "..")
    throw ConfigError("config: run_id must be a plain directory name");
}

std::string ExperimentConfig::echo() const {
  std::string out;
  for (const auto& [key, value] : values_) {
    const ConfigKey* k = find_key(key);
    if (k && k->runtime) continue;
    out += key + " = " + value + "\n";
  }
  return out;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : echo()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pawclock::cli
