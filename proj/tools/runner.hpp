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

// Configuration-driven experiment runner. Every command produces a CSV
// table whose '#' header lists the full configuration, so that the file can
// be regenerated bitwise from its own metadata.

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "telegraph/bloch.hpp"
#include "telegraph/mc.hpp"
#include "telegraph/noise.hpp"
#include "telegraph/types.hpp"

namespace telegraph::runner {

/// Bad configuration: unknown key, malformed value, unusable combination.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command {
  kSimulate,
  kCorrelations,
  kNonmark,
  kCompare,
  kRegion,
  kTrajectory
};
enum class Solver { kAnalytic, kMc };
enum class Measure { kBlp, kRhp, kBoth };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

/// `a..b` (default spacing), `a..b:n` (n linear points), `a..b:logn`
/// (n log-spaced points), a single number, or a comma-separated list.
/// Without a count, ranges with 0 < a use 4 log-spaced points per decade,
/// others 41 linear points.
std::vector<double> parse_sweep(const std::string& spec);

struct ExperimentConfig {
  Command command = Command::kSimulate;
  ModelParams model{1.0, 1.0};
  NoiseKind noise = NoiseKind::kRtn;
  mc::Topology env = mc::Topology::kCommon;
  std::string state;  // empty: the command's default state
  double dt = 0.05;
  std::int64_t steps = 200;
  EnsembleConfig ensemble;
  Solver solver = Solver::kAnalytic;
  mc::SamplingRule rule = mc::SamplingRule::kLeft;
  Measure measure = Measure::kBoth;
  std::string gamma_list = "0.01..100";
  std::string omega_range = "0..0.36";
  std::string gamma_range = "0.1..10";
  std::int64_t index = 0;  // trajectory number for `trajectory`
  int threads = 0;         // 0: TELEGRAPH_THREADS or hardware
  std::string output = "-";
};

/// Keys accepted in config files and as --key flags.
const std::vector<std::string>& config_keys();

/// Sets one key; throws ConfigError for unknown keys or bad values.
void set_key(ExperimentConfig& cfg, const std::string& key,
             const std::string& value);

/// Flat `key=value` lines; blank lines and lines starting with '#' are
/// skipped.
void apply_config_text(ExperimentConfig& cfg, const std::string& text);
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

/// The resolved configuration as written to the metadata header. Thread
/// count and output path are omitted: they do not change the table.
std::vector<std::pair<std::string, std::string>> metadata(
    const ExperimentConfig& cfg);

/// Rebuilds the configuration from a CSV produced by `write_csv`.
ExperimentConfig config_from_csv(const std::string& csv);

/// `bloch:x,y,z` or `x,y,z` (Bloch vector), `mixed`.
QubitState parse_qubit_state(const std::string& spec);

/// `bell-psi-plus`, `bell-phi-minus`, `mixed`, `werner:p`, or Bell-diagonal
/// correlation coordinates `c1,c2,c3`.
TwoQubitState parse_two_qubit_state(const std::string& spec);

struct ResultTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// '#'-prefixed metadata, a header row, then one row per sample. Numbers
/// are printed in shortest round-trip form.
void write_csv(std::ostream& out, const ResultTable& table);

struct RunResult {
  ResultTable table;
  /// False when a measure did not converge or an optimum was not resolved.
  bool converged = true;
  std::string warning;
};

RunResult run(const ExperimentConfig& cfg);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNotConverged = 3;

}  // namespace telegraph::runner
