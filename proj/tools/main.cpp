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

// telegraph <command> [--config FILE] [--key value ...]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "runner.hpp"

namespace runner = telegraph::runner;

namespace {

constexpr const char* kHelp[][2] = {
    {"simulate", "single-qubit Bloch vector, analytic or Monte Carlo"},
    {"correlations", "negativity, discord and mutual information of two qubits"},
    {"nonmark", "BLP and RHP measures over a gamma sweep (OU: probe)"},
    {"compare", "best RTN match to an OU reference by mean infidelity"},
    {"region", "gamma interval with an all-real spectrum, per omega"},
    {"trajectory", "one noise realization and the Bloch path it drives"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit dynamics under random telegraph and OU noise"};
  app.require_subcommand(1);
  // Values are kept as strings and validated by the runner, so that flags and
  // config files share one parser.
  std::map<std::string, std::map<std::string, std::optional<std::string>>> flags;
  std::map<std::string, std::string> config_path;
  for (const auto& [name, help] : kHelp) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path[name], "key=value config file");
    for (const auto& key : runner::config_keys()) {
      if (key == "command") continue;
      const std::string names = key == "output" ? "-o,--output" : "--" + key;
      sub->add_option(names, flags[name][key]);
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : runner::kExitConfig;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  runner::ExperimentConfig cfg;
  runner::RunResult result;
  try {
    cfg.command = runner::command_from_string(name);
    if (!config_path[name].empty()) {
      runner::apply_config_file(cfg, config_path[name]);
      if (runner::to_string(cfg.command) != name)
        throw runner::ConfigError("config file is for command '" +
                                  runner::to_string(cfg.command) + "'");
    }
    // Flags override the file, in the fixed key order.
    for (const auto& key : runner::config_keys()) {
      const auto it = flags[name].find(key);
      if (it != flags[name].end() && it->second)
        runner::set_key(cfg, key, *it->second);
    }
    std::ofstream file;
    if (cfg.output != "-") {
      file.open(cfg.output);
      if (!file)
        throw runner::ConfigError("cannot write output '" + cfg.output + "'");
    }
    result = runner::run(cfg);
    std::ostream& out = cfg.output == "-" ? std::cout : file;
    runner::write_csv(out, result.table);
    out.flush();
    if (!out) throw runner::ConfigError("write to '" + cfg.output + "' failed");
  } catch (const runner::ConfigError& e) {
    std::cerr << "telegraph " << name << ": " << e.what() << '\n';
    return runner::kExitConfig;
  }
  if (!result.converged) {
    std::cerr << "telegraph " << name << ": warning: " << result.warning
              << '\n';
    return runner::kExitNotConverged;
  }
  return runner::kExitOk;
}
