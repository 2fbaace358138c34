// Copyright 2026 The Telegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "runner.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "telegraph/analytic.hpp"
#include "telegraph/correlations.hpp"
#include "telegraph/nonmarkov.hpp"
#include "telegraph/parallel.hpp"

namespace telegraph::runner {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError(what + ": not a number: '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  int base = 10;
  const char* first = t.data();
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    base = 16;
    first += 2;
  }
  const auto [end, ec] = std::from_chars(first, t.data() + t.size(), v, base);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError(what + ": not an integer: '" + s + "'");
  return v;
}

std::uint64_t parse_seed(const std::string& s) {
  const std::string t = trim(s);
  std::uint64_t v = 0;
  int base = 10;
  const char* first = t.data();
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    base = 16;
    first += 2;
  }
  const auto [end, ec] = std::from_chars(first, t.data() + t.size(), v, base);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty())
    throw ConfigError("seed: not an unsigned integer: '" + s + "'");
  return v;
}

std::string format(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::vector<double> parse_vector(const std::string& s, std::size_t n,
                                 const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != n)
    throw ConfigError(what + ": expected " + std::to_string(n) +
                      " comma-separated numbers, got '" + s + "'");
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(parse_double(p, what));
  return out;
}

std::string solver_name(Solver s) {
  return s == Solver::kAnalytic ? "analytic" : "mc";
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::kBlp:
      return "blp";
    case Measure::kRhp:
      return "rhp";
    default:
      return "both";
  }
}

std::string rule_name(mc::SamplingRule r) {
  return r == mc::SamplingRule::kLeft ? "left" : "midpoint";
}

std::string default_state(Command c) {
  return c == Command::kCorrelations ? "bell-psi-plus" : "bloch:1,0,0";
}

std::string resolved_state(const ExperimentConfig& cfg) {
  return cfg.state.empty() ? default_state(cfg.command) : cfg.state;
}

// Command-independent spellings of every key, in metadata order.
const std::vector<std::string> kKeys = {
    "command",     "omega",       "gamma", "noise",  "env",   "state",
    "dt",          "steps",       "n",     "seed",   "solver", "rule",
    "measure",     "gamma-list",  "omega-range", "gamma-range", "index",
    "threads",     "output"};

TimeGrid grid_of(const ExperimentConfig& cfg) {
  const TimeGrid grid{cfg.dt, cfg.steps};
  try {
    validate(grid);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return grid;
}

mc::McOptions mc_options(const ExperimentConfig& cfg) {
  mc::McOptions o;
  o.rule = cfg.rule;
  o.threads = cfg.threads;
  return o;
}

ResultTable table_for(const ExperimentConfig& cfg,
                      std::vector<std::string> columns) {
  ResultTable t;
  t.metadata = metadata(cfg);
  t.columns = std::move(columns);
  return t;
}

// Evaluates f(0..n-1) on up to `threads` workers; results keep their index.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, int threads, F&& f) {
  std::vector<R> out(n);
  const int workers = std::max(1, threads > 0 ? threads : thread_count());
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers && static_cast<std::size_t>(w) < n; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n;
           i += static_cast<std::size_t>(workers)) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

RunResult run_simulate(const ExperimentConfig& cfg) {
  const QubitState rho0 = parse_qubit_state(resolved_state(cfg));
  const Vec3 n0 = bloch_from_density(rho0).n;
  const TimeGrid grid = grid_of(cfg);
  RunResult r;
  r.table = table_for(cfg, {"t", "x", "y", "z", "se_x", "se_y", "se_z"});
  if (cfg.solver == Solver::kAnalytic) {
    if (cfg.noise != NoiseKind::kRtn)
      throw ConfigError("the analytic solver covers RTN only; use solver=mc");
    const auto series = rtn::transfer_single_series(cfg.model, grid);
    for (std::size_t k = 0; k < series.size(); ++k) {
      const Vec3 n = series[k] * n0;
      r.table.rows.push_back(
          {grid.time(static_cast<std::int64_t>(k)), n(0), n(1), n(2), 0, 0, 0});
    }
    return r;
  }
  const auto ens = mc::evolve_bloch_mc(cfg.model, cfg.noise, n0, grid,
                                       cfg.ensemble, mc_options(cfg));
  for (std::size_t k = 0; k < ens.times.size(); ++k) {
    const Vec3& m = ens.mean[k];
    const Mat3& c = ens.mean_covariance[k];
    r.table.rows.push_back({ens.times[k], m(0), m(1), m(2),
                            std::sqrt(c(0, 0)), std::sqrt(c(1, 1)),
                            std::sqrt(c(2, 2))});
  }
  return r;
}

RunResult run_correlations(const ExperimentConfig& cfg) {
  const TwoQubitState rho0 = parse_two_qubit_state(resolved_state(cfg));
  const TimeGrid grid = grid_of(cfg);
  std::vector<TwoQubitState> states;
  std::vector<double> se;
  if (cfg.solver == Solver::kAnalytic) {
    if (cfg.noise != NoiseKind::kRtn)
      throw ConfigError("the analytic solver covers RTN only; use solver=mc");
    const auto v0 = generalized_bloch_from_density(rho0);
    if (cfg.env == mc::Topology::kCommon) {
      for (const Mat15& t : rtn::transfer_two_ce_series(cfg.model, grid))
        states.push_back(density_from_generalized_bloch(rtn::apply_transfer(t, v0)));
    } else {
      for (const Mat3& t : rtn::transfer_single_series(cfg.model, grid)) {
        states.push_back(density_from_generalized_bloch(
            cfg.env == mc::Topology::kIndependent
                ? rtn::apply_transfer(rtn::transfer_two_from_single(t), v0)
                : nonmarkov::apply_channel_one_side(t, v0)));
      }
    }
    se.assign(states.size(), 0.0);
  } else {
    auto res = mc::evolve_two_mc(cfg.model, cfg.noise, cfg.env, rho0, grid,
                                 cfg.ensemble, mc_options(cfg));
    states = std::move(res.states);
    se = std::move(res.stderr_per_time);
  }
  RunResult r;
  r.table = table_for(cfg, {"t", "negativity", "discord", "mutual_information",
                            "stderr"});
  for (std::size_t k = 0; k < states.size(); ++k) {
    r.table.rows.push_back({grid.time(static_cast<std::int64_t>(k)),
                            negativity(states[k]), discord(states[k]),
                            mutual_information(states[k]), se[k]});
  }
  return r;
}

RunResult run_nonmark(const ExperimentConfig& cfg) {
  const std::vector<double> gammas = parse_sweep(cfg.gamma_list);
  for (double g : gammas)
    if (!(g > 0.0)) throw ConfigError("gamma-list values must be positive");
  RunResult r;
  if (cfg.noise == NoiseKind::kOu) {
    // Trace-distance probe for the pair (rho(n), rho(-n)).
    const Vec3 n = bloch_from_density(parse_qubit_state(resolved_state(cfg))).n;
    if (n.norm() == 0.0)
      throw ConfigError("the OU probe needs a state with nonzero Bloch vector");
    const auto pair = std::pair{density_from_bloch(BlochVector(n)),
                                density_from_bloch(BlochVector(Vec3(-n)))};
    const TimeGrid grid = grid_of(cfg);
    r.table = table_for(cfg, {"gamma", "increments", "raw_increments",
                              "threshold", "inconclusive"});
    for (double g : gammas) {
      const auto probe = nonmarkov::trace_distance_probe_ou(
          {cfg.model.omega, g}, pair, grid, cfg.ensemble, mc_options(cfg));
      r.table.rows.push_back({g, probe.increments, probe.raw_increments,
                              probe.threshold, probe.inconclusive ? 1.0 : 0.0});
    }
    return r;
  }
  const bool blp = cfg.measure != Measure::kRhp;
  const bool rhp = cfg.measure != Measure::kBlp;
  std::vector<std::string> columns{"gamma"};
  if (blp)
    columns.insert(columns.end(),
                   {"blp", "blp_theta", "blp_phi", "blp_converged"});
  if (rhp) columns.insert(columns.end(), {"rhp", "rhp_converged"});
  r.table = table_for(cfg, columns);
  const double omega = cfg.model.omega;
  r.table.rows = parallel_map<std::vector<double>>(
      gammas.size(), cfg.threads, [&](std::size_t i) {
        const ModelParams p{omega, gammas[i]};
        std::vector<double> row{gammas[i]};
        if (blp) {
          const auto b = nonmarkov::blp_measure(p);
          row.insert(row.end(),
                     {b.value, b.theta, b.phi, b.converged ? 1.0 : 0.0});
        }
        if (rhp) {
          const auto q = nonmarkov::rhp_measure(p);
          row.insert(row.end(), {q.value, q.converged ? 1.0 : 0.0});
        }
        return row;
      });
  std::vector<std::size_t> flags;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (columns[c].ends_with("_converged")) flags.push_back(c);
  for (const auto& row : r.table.rows) {
    for (std::size_t c : flags) {
      if (row[c] == 0.0) {
        r.converged = false;
        r.warning = "measure not converged at gamma = " + format(row[0]) +
                    " (tail above tolerance)";
      }
    }
  }
  return r;
}

RunResult run_compare(const ExperimentConfig& cfg) {
  if (cfg.noise != NoiseKind::kOu)
    throw ConfigError("compare fits RTN to an OU reference; set noise=ou");
  const QubitState rho0 = parse_qubit_state(resolved_state(cfg));
  const TimeGrid grid = grid_of(cfg);
  const std::vector<double> range = parse_sweep(cfg.gamma_range);
  const auto [lo, hi] = std::minmax_element(range.begin(), range.end());
  if (!(*lo > 0.0) || !(*hi > *lo))
    throw ConfigError("gamma-range must be a positive interval a..b");
  GammaSearchOptions opt;
  opt.mc = mc_options(cfg);
  if (range.size() >= 2) opt.coarse_points = static_cast<int>(range.size());
  const GammaOptimum best =
      optimize_gamma_rtn(cfg.model, rho0, grid.horizon(), {*lo, *hi}, grid,
                         cfg.ensemble, opt);
  RunResult r;
  r.table = table_for(cfg, {"gamma_rtn", "mean_infidelity", "optimum"});
  for (const auto& [g, v] : best.scan) r.table.rows.push_back({g, v, 0.0});
  r.table.rows.push_back({best.gamma_star, best.value, 1.0});
  std::stable_sort(r.table.rows.begin(), r.table.rows.end(),
                   [](const auto& a, const auto& b) { return a[0] < b[0]; });
  if (!best.resolved) {
    r.converged = false;
    r.warning = "objective is flat within the quadrature error (" +
                format(best.quadrature_error) + "); optimum not resolved";
  }
  return r;
}

RunResult run_region(const ExperimentConfig& cfg) {
  const std::vector<double> omegas = parse_sweep(cfg.omega_range);
  RunResult r;
  r.table = table_for(cfg, {"omega", "gamma1", "gamma2", "has_region"});
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double w : omegas) {
    if (!(w >= 0.0)) throw ConfigError("omega-range values must be >= 0");
    const auto b = rtn::real_region_boundaries(w);
    r.table.rows.push_back({w, b ? b->first : nan, b ? b->second : nan,
                            b ? 1.0 : 0.0});
  }
  return r;
}

RunResult run_trajectory(const ExperimentConfig& cfg) {
  if (cfg.index < 0 || cfg.index >= cfg.ensemble.n_realizations)
    throw ConfigError("index must lie in [0, n)");
  const TimeGrid grid = grid_of(cfg);
  const NoiseTrajectory b = sample_noise(
      cfg.noise, cfg.model, grid,
      derive_seed(cfg.ensemble.master_seed,
                  static_cast<std::uint64_t>(cfg.index)));
  QubitState rho = parse_qubit_state(resolved_state(cfg));
  RunResult r;
  r.table = table_for(cfg, {"t", "B", "x", "y", "z"});
  for (std::size_t k = 0; k < b.values.size(); ++k) {
    const Vec3 n = bloch_from_density(rho).n;
    r.table.rows.push_back({grid.time(static_cast<std::int64_t>(k)),
                            b.values[k], n(0), n(1), n(2)});
    const Mat2c u = mc::step_unitary(cfg.model.omega, b.values[k], grid.dt);
    rho = QubitState(u * rho.matrix() * u.adjoint());
  }
  return r;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::kSimulate:
      return "simulate";
    case Command::kCorrelations:
      return "correlations";
    case Command::kNonmark:
      return "nonmark";
    case Command::kCompare:
      return "compare";
    case Command::kRegion:
      return "region";
    default:
      return "trajectory";
  }
}

Command command_from_string(const std::string& s) {
  for (Command c : {Command::kSimulate, Command::kCorrelations,
                    Command::kNonmark, Command::kCompare, Command::kRegion,
                    Command::kTrajectory})
    if (to_string(c) == s) return c;
  throw ConfigError("unknown command '" + s + "'");
}

std::vector<double> parse_sweep(const std::string& spec) {
  const std::string s = trim(spec);
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    std::vector<double> out;
    for (const auto& part : split(s, ','))
      out.push_back(parse_double(part, "sweep"));
    if (out.empty()) throw ConfigError("empty sweep");
    return out;
  }
  const double a = parse_double(s.substr(0, dots), "sweep start");
  std::string rest = s.substr(dots + 2);
  std::string count;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    count = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }
  const double b = parse_double(rest, "sweep end");
  if (!(b >= a)) throw ConfigError("sweep end must not precede its start");
  bool log = false;
  std::int64_t n = 0;
  if (count.empty()) {
    log = a > 0.0;
    n = log ? static_cast<std::int64_t>(std::lround(4.0 * std::log10(b / a))) + 1
            : 41;
  } else {
    if (count.starts_with("log")) {
      log = true;
      count = count.substr(3);
    }
    n = parse_int(count, "sweep count");
  }
  if (n < 1) throw ConfigError("sweep count must be positive");
  if (log && !(a > 0.0)) throw ConfigError("log sweep needs a positive start");
  if (a == b || n == 1) return std::vector<double>(1, a);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    out[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(a) + f * (std::log(b) - std::log(a)))
            : a + f * (b - a);
  }
  out.front() = a;
  out.back() = b;
  return out;
}

const std::vector<std::string>& config_keys() { return kKeys; }

void set_key(ExperimentConfig& cfg, const std::string& raw_key,
             const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "command") {
    cfg.command = command_from_string(value);
  } else if (key == "omega") {
    cfg.model.omega = parse_double(value, key);
  } else if (key == "gamma") {
    cfg.model.gamma = parse_double(value, key);
  } else if (key == "noise") {
    try {
      cfg.noise = noise_kind_from_string(value);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "env") {
    try {
      cfg.env = mc::topology_from_string(value);
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "state") {
    cfg.state = value;
  } else if (key == "dt") {
    cfg.dt = parse_double(value, key);
  } else if (key == "steps") {
    cfg.steps = parse_int(value, key);
  } else if (key == "n") {
    cfg.ensemble.n_realizations = parse_int(value, key);
  } else if (key == "seed") {
    cfg.ensemble.master_seed = parse_seed(value);
  } else if (key == "solver") {
    if (value == "analytic") cfg.solver = Solver::kAnalytic;
    else if (value == "mc") cfg.solver = Solver::kMc;
    else throw ConfigError("solver must be analytic or mc");
  } else if (key == "rule") {
    if (value == "left") cfg.rule = mc::SamplingRule::kLeft;
    else if (value == "midpoint") cfg.rule = mc::SamplingRule::kMidpoint;
    else throw ConfigError("rule must be left or midpoint");
  } else if (key == "measure") {
    if (value == "blp") cfg.measure = Measure::kBlp;
    else if (value == "rhp") cfg.measure = Measure::kRhp;
    else if (value == "both") cfg.measure = Measure::kBoth;
    else throw ConfigError("measure must be blp, rhp or both");
  } else if (key == "gamma-list") {
    parse_sweep(value);
    cfg.gamma_list = value;
  } else if (key == "omega-range") {
    parse_sweep(value);
    cfg.omega_range = value;
  } else if (key == "gamma-range") {
    parse_sweep(value);
    cfg.gamma_range = value;
  } else if (key == "index") {
    cfg.index = parse_int(value, key);
  } else if (key == "threads") {
    const std::int64_t t = parse_int(value, key);
    if (t < 0) throw ConfigError("threads must be >= 0");
    cfg.threads = static_cast<int>(t);
  } else if (key == "output") {
    cfg.output = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number) +
                        ": expected key=value");
    set_key(cfg, t.substr(0, eq), t.substr(eq + 1));
  }
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(cfg, text.str());
}

std::vector<std::pair<std::string, std::string>> metadata(
    const ExperimentConfig& cfg) {
  char seed[32];
  std::snprintf(seed, sizeof(seed), "0x%llX",
                static_cast<unsigned long long>(cfg.ensemble.master_seed));
  return {{"command", to_string(cfg.command)},
          {"omega", format(cfg.model.omega)},
          {"gamma", format(cfg.model.gamma)},
          {"noise", telegraph::to_string(cfg.noise)},
          {"env", mc::to_string(cfg.env)},
          {"state", resolved_state(cfg)},
          {"dt", format(cfg.dt)},
          {"steps", std::to_string(cfg.steps)},
          {"n", std::to_string(cfg.ensemble.n_realizations)},
          {"seed", seed},
          {"solver", solver_name(cfg.solver)},
          {"rule", rule_name(cfg.rule)},
          {"measure", measure_name(cfg.measure)},
          {"gamma-list", cfg.gamma_list},
          {"omega-range", cfg.omega_range},
          {"gamma-range", cfg.gamma_range},
          {"index", std::to_string(cfg.index)}};
}

ExperimentConfig config_from_csv(const std::string& csv) {
  ExperimentConfig cfg;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line) && !line.empty() && line[0] == '#') {
    const std::string body = trim(line.substr(1));
    const auto eq = body.find('=');
    if (eq != std::string::npos) set_key(cfg, body.substr(0, eq), body.substr(eq + 1));
  }
  return cfg;
}

QubitState parse_qubit_state(const std::string& raw) {
  std::string spec = trim(raw);
  if (spec == "mixed") return density_from_bloch(BlochVector(Vec3::Zero()));
  if (spec.starts_with("bloch:")) spec = spec.substr(6);
  const auto v = parse_vector(spec, 3, "qubit state");
  const Vec3 n(v[0], v[1], v[2]);
  if (!n.allFinite()) throw ConfigError("qubit state: non-finite component");
  if (n.norm() > 1.0 + kPhysTol)
    throw ConfigError("qubit state: Bloch vector norm " + format(n.norm()) +
                      " exceeds 1 (|n| <= 1 violated)");
  return density_from_bloch(BlochVector(n));
}

TwoQubitState parse_two_qubit_state(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "bell-psi-plus") return bell_psi_plus();
  if (spec == "bell-phi-minus") return bell_phi_minus();
  if (spec == "mixed") return TwoQubitState(Mat4c::Identity() / 4.0);
  if (spec.starts_with("werner:")) {
    const double p = parse_double(spec.substr(7), "werner weight");
    if (!(p >= -1.0 / 3.0 - kPhysTol && p <= 1.0 + kPhysTol))
      throw ConfigError("werner weight " + format(p) +
                        " outside [-1/3, 1] (state not positive)");
    return werner_state(p);
  }
  const auto v = parse_vector(spec, 3, "two-qubit state");
  const BellDiagonalCoords c{Vec3(v[0], v[1], v[2])};
  if (!c.c.allFinite()) throw ConfigError("two-qubit state: non-finite value");
  const Eigen::Vector4d lam = bell_diagonal_eigenvalues(c);
  static const std::array<const char*, 4> kConstraint = {
      "1 - c1 - c2 - c3 >= 0", "1 - c1 + c2 + c3 >= 0",
      "1 + c1 - c2 + c3 >= 0", "1 + c1 + c2 - c3 >= 0"};
  for (int i = 0; i < 4; ++i)
    if (lam(i) < -kPhysTol)
      throw ConfigError(std::string("two-qubit state: outside the tetrahedron, ") +
                        kConstraint[static_cast<std::size_t>(i)] + " violated");
  return bell_diagonal_state(c.c);
}

void write_csv(std::ostream& out, const ResultTable& table) {
  out << "# telegraph " << TELEGRAPH_VERSION << '\n';
  for (const auto& [k, v] : table.metadata) out << "# " << k << '=' << v << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << format(row[c]);
    out << '\n';
  }
}

RunResult run(const ExperimentConfig& cfg) {
  if (cfg.ensemble.n_realizations < 1)
    throw ConfigError("n must be at least 1");
  try {
    switch (cfg.command) {
      case Command::kSimulate:
        return run_simulate(cfg);
      case Command::kCorrelations:
        return run_correlations(cfg);
      case Command::kNonmark:
        return run_nonmark(cfg);
      case Command::kCompare:
        return run_compare(cfg);
      case Command::kRegion:
        return run_region(cfg);
      default:
        return run_trajectory(cfg);
    }
  } catch (const InvalidArgument& e) {
    // Non-physical parameters reported by the library.
    throw ConfigError(e.what());
  }
}

}  // namespace telegraph::runner
