#include "itsdeal/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

namespace itsdeal {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool parse_real(const std::string& s, double& v) {
  if (s == "inf") {
    v = kInf;
    return true;
  }
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  return ec == std::errc() && ptr == e;
}

bool parse_int(const std::string& s, long& v) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  return ec == std::errc() && ptr == e;
}

bool parse_seed(const std::string& s, std::uint64_t& v) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  return ec == std::errc() && ptr == e;
}

bool is_auto(const std::string& s) { return s == "auto" || s == "none" || s.empty(); }

bool parse_bool(const std::string& s, bool& v) {
  if (s == "on" || s == "true" || s == "1" || s == "yes") {
    v = true;
    return true;
  }
  if (s == "off" || s == "false" || s == "0" || s == "no") {
    v = false;
    return true;
  }
  return false;
}

void check_value(const SchemaEntry& e, const std::string& v) {
  double d;
  long l;
  std::uint64_t u;
  bool b;
  auto fail = [&](const std::string& what) {
    throw ConfigError("config key '" + e.key + "': expected " + what + ", got '" + v + "'");
  };
  switch (e.type) {
    case ValueType::Real:
      if (!parse_real(v, d)) fail("a number");
      break;
    case ValueType::OptReal:
      if (!is_auto(v) && !parse_real(v, d)) fail("a number or 'auto'");
      break;
    case ValueType::Int:
      if (!parse_int(v, l)) fail("an integer");
      break;
    case ValueType::Seed:
      if (!parse_seed(v, u)) fail("an unsigned 64-bit integer");
      break;
    case ValueType::Bool:
      if (!parse_bool(v, b)) fail("on/off");
      break;
    case ValueType::Choice:
      if (std::find(e.choices.begin(), e.choices.end(), v) == e.choices.end()) {
        std::string all;
        for (const auto& c : e.choices) all += (all.empty() ? "" : "|") + c;
        fail("one of " + all);
      }
      break;
    case ValueType::List:
    case ValueType::String: break;
  }
}

const std::vector<std::string> kAlgorithms = {"higda", "pf-higda", "ideals", "sg-dss", "sg-css"};

}  // namespace

const std::vector<SchemaEntry>& Config::schema() {
  using T = ValueType;
  static const std::vector<SchemaEntry> s = {
      {"alg", T::Choice, "ideals", "algorithm", kAlgorithms},
      {"problem", T::Choice, "rsr", "objective",
       {"rsr", "quadratic", "quartic", "l1", "clipped", "zero"}},
      {"dim", T::Int, "1", "dimension of the built-in test problems", {}},
      {"x0", T::List, "auto", "starting point (comma list); auto = 0 for rsr, 2 for test problems", {}},
      {"seed", T::Seed, "0", "instance seed (master seed for bench)", {}},
      {"p", T::Real, "1.25", "envelope power in (1, 2]", {}},
      {"gamma", T::Real, "0.9", "envelope parameter", {}},
      {"c1", T::Real, "1", "direction constant c1", {}},
      {"c2", T::Real, "1", "direction constant c2", {}},
      {"mu", T::OptReal, "auto", "relative prox bound; auto = 0.9 (1/2^{2-p})^{1/(p-1)}", {}},
      {"omega", T::OptReal, "auto", "IDEALS direction exponent; auto = (2-p)/(p-1)", {}},
      {"eps.scale", T::Real, "1", "eps_k = scale/(k+1)^2", {}},
      {"armijo.lambda", T::Real, "0.5", "", {}},
      {"armijo.upsilon", T::Real, "0.4", "", {}},
      {"armijo.max_backtracks", T::Int, "50", "", {}},
      {"pf.scenario", T::Choice, "S3", "", {"S1", "S2", "S3"}},
      {"pf.growth", T::Real, "3", "Lbar growth factor", {}},
      {"pf.L0", T::Real, "1e-3", "", {}},
      {"pf.max_trials", T::Int, "60", "", {}},
      {"inner.kind", T::Choice, "decaying", "", {"decaying", "constant", "exact"}},
      {"inner.alpha0", T::Real, "0.95", "", {}},
      {"inner.max_iters", T::Int, "200", "", {}},
      {"inner.move_tol", T::Real, "1e-3", "", {}},
      {"higda.calL", T::OptReal, "auto", "Hölder constant of the envelope gradient", {}},
      {"safeguard.radius", T::OptReal, "auto", "sublevel-set radius (safeguarded mode)", {}},
      {"safeguard.gamma_max", T::OptReal, "auto", "gamma cap (safeguarded mode)", {}},
      {"safeguard.ell0", T::OptReal, "auto", "lower bound of f (safeguarded mode)", {}},
      {"sg.alpha", T::Real, "0.95", "SG-DSS alpha0 / SG-CSS constant step", {}},
      {"stop.grad_tol", T::Real, "1e-8", "", {}},
      {"stop.max_iters", T::Int, "0", "iteration budget, 0 = none", {}},
      {"budget_s", T::Real, "10", "wall-clock budget per run, 0 = none", {}},
      {"instance.n", T::Int, "1000", "", {}},
      {"instance.m", T::Int, "500", "", {}},
      {"instance.k1", T::Int, "50", "", {}},
      {"instance.k2", T::Int, "30", "", {}},
      {"instance.sigma", T::Real, "1", "", {}},
      {"instance.lambda_bar", T::Real, "0.5", "", {}},
      {"instance.file", T::String, "", "read the instance from this file instead", {}},
      {"trace.stride", T::Int, "1", "keep every n-th row", {}},
      {"trace.clock", T::Bool, "on", "record wall_time_s (off writes 0)", {}},
      {"bench.name", T::String, "experiment", "", {}},
      {"bench.kind", T::Choice, "comparison", "", {"comparison", "sweep_p"}},
      {"bench.roster", T::String, "", "alg(key=value, ...); ...", {}},
      {"bench.k1", T::List, "50", "", {}},
      {"bench.p", T::List, "1.25,1.5,1.75,2", "", {}},
      {"bench.omega", T::List, "0,1,2,3,4,5", "", {}},
      {"bench.scenarios", T::List, "S1,S2,S3", "", {}},
      {"bench.trials", T::Int, "1", "", {}},
      {"bench.thresholds", T::List, "1e-2,1e-3", "", {}},
      {"bench.write_traces", T::Bool, "on", "", {}},
  };
  return s;
}

const SchemaEntry& Config::entry(const std::string& key) {
  for (const auto& e : schema())
    if (e.key == key) return e;
  throw ConfigError("unknown config key '" + key + "'");
}

Config::Config() {
  for (const auto& e : schema()) values_.push_back(e.default_value);
}

void Config::set(const std::string& key, const std::string& value) {
  const auto& s = schema();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].key != key) continue;
    const std::string v = trim(value);
    check_value(s[i], v);
    values_[i] = v;
    return;
  }
  throw ConfigError("unknown config key '" + key + "'");
}

void Config::set_assignment(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

const std::string& Config::get(const std::string& key) const {
  const auto& s = schema();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].key == key) return values_[i];
  throw ConfigError("unknown config key '" + key + "'");
}

double Config::real(const std::string& key) const {
  double v;
  if (!parse_real(get(key), v)) throw ConfigError("config key '" + key + "' is not a number");
  return v;
}

std::optional<double> Config::opt_real(const std::string& key) const {
  if (is_auto(get(key))) return std::nullopt;
  return real(key);
}

long Config::integer(const std::string& key) const {
  long v;
  if (!parse_int(get(key), v)) throw ConfigError("config key '" + key + "' is not an integer");
  return v;
}

std::uint64_t Config::seed(const std::string& key) const {
  std::uint64_t v;
  if (!parse_seed(get(key), v)) throw ConfigError("config key '" + key + "' is not a seed");
  return v;
}

bool Config::flag(const std::string& key) const {
  bool v;
  if (!parse_bool(get(key), v)) throw ConfigError("config key '" + key + "' is not on/off");
  return v;
}

std::vector<std::string> Config::list(const std::string& key) const { return split(get(key), ','); }

std::vector<double> Config::real_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& s : list(key)) {
    double v;
    if (!parse_real(s, v))
      throw ConfigError("config key '" + key + "': '" + s + "' is not a number");
    out.push_back(v);
  }
  return out;
}

void Config::parse(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      set_assignment(t);
    } catch (const ConfigError& e) {
      throw ConfigError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  parse(in, path);
}

Config Config::from_header(std::istream& in) {
  Config c;
  std::string line;
  while (in.peek() == '#' && std::getline(in, line)) {
    const std::string t = trim(line.substr(1));
    const auto eq = t.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = t.substr(0, eq);
    if (key.rfind("meta.", 0) == 0 || key.rfind("run.", 0) == 0) continue;
    c.set(key, t.substr(eq + 1));
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> Config::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& s = schema();
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(s[i].key, values_[i]);
  return out;
}

HomeParams home_params(const Config& cfg) {
  HomeParams P;
  P.p = cfg.real("p");
  P.gamma = cfg.real("gamma");
  P.c1 = cfg.real("c1");
  P.c2 = cfg.real("c2");
  P.mu = cfg.opt_real("mu").value_or(kNaN);
  P.omega = cfg.opt_real("omega").value_or(kNaN);
  P.eps.scale = cfg.real("eps.scale");
  P.armijo_lambda = cfg.real("armijo.lambda");
  P.armijo_upsilon = cfg.real("armijo.upsilon");
  P.max_backtracks = static_cast<int>(cfg.integer("armijo.max_backtracks"));
  P.scenario = scenario_from_string(cfg.get("pf.scenario"));
  P.lbar_growth = cfg.real("pf.growth");
  P.L0 = cfg.real("pf.L0");
  P.max_trials = static_cast<int>(cfg.integer("pf.max_trials"));
  P.inner.kind = inner_solver_kind_from_string(cfg.get("inner.kind"));
  P.inner.alpha0 = cfg.real("inner.alpha0");
  P.inner.max_iters = static_cast<int>(cfg.integer("inner.max_iters"));
  P.inner.move_tol = cfg.real("inner.move_tol");
  P.grad_tol = cfg.real("stop.grad_tol");
  return P;
}

InstanceParams instance_params(const Config& cfg) {
  InstanceParams I;
  I.n = static_cast<int>(cfg.integer("instance.n"));
  I.m = static_cast<int>(cfg.integer("instance.m"));
  I.k1 = static_cast<int>(cfg.integer("instance.k1"));
  I.k2 = static_cast<int>(cfg.integer("instance.k2"));
  I.sigma = cfg.real("instance.sigma");
  I.lambda_bar = cfg.real("instance.lambda_bar");
  I.seed = cfg.seed("seed");
  return I;
}

RunOptions run_options(const Config& cfg) {
  RunOptions o;
  const long iters = cfg.integer("stop.max_iters");
  if (iters < 0) throw ConfigError("stop.max_iters must be >= 0");
  if (iters > 0) o.budget.max_iters = iters;
  const double t = cfg.real("budget_s");
  if (!(t >= 0.0)) throw ConfigError("budget_s must be >= 0");
  if (t > 0.0) o.budget.time_s = t;
  o.record_clock = cfg.flag("trace.clock");
  o.row_stride = static_cast<int>(cfg.integer("trace.stride"));
  if (o.row_stride < 1) throw ConfigError("trace.stride must be >= 1");
  return o;
}

SubgradientConfig subgradient_config(const Config& cfg) {
  SubgradientConfig s;
  s.decaying = cfg.get("alg") == "sg-dss";
  s.alpha0 = cfg.real("sg.alpha");
  return s;
}

std::string RosterEntry::label() const {
  std::string s = alg;
  for (const auto& [k, v] : overrides) s += "_" + k + "-" + v;
  for (char& c : s)
    if (c == '/' || c == ' ' || c == '=' || c == ',') c = '-';
  return s;
}

Config RosterEntry::apply(const Config& base) const {
  Config c = base;
  c.set("alg", alg);
  for (const auto& [k, v] : overrides) c.set(k, v);
  return c;
}

std::vector<RosterEntry> parse_roster(const std::string& text) {
  std::vector<RosterEntry> out;
  for (const auto& item : split(text, ';')) {
    RosterEntry r;
    const auto open = item.find('(');
    r.alg = trim(item.substr(0, open));
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), r.alg) == kAlgorithms.end())
      throw ConfigError("roster: unknown algorithm '" + r.alg + "'");
    if (open != std::string::npos) {
      const auto close = item.rfind(')');
      if (close == std::string::npos || close < open)
        throw ConfigError("roster: missing ')' in '" + item + "'");
      for (const auto& kv : split(item.substr(open + 1, close - open - 1), ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("roster: expected key=value in '" + kv + "'");
        const std::string key = trim(kv.substr(0, eq));
        const std::string val = trim(kv.substr(eq + 1));
        check_value(Config::entry(key), val);
        r.overrides.emplace_back(key, val);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace itsdeal
