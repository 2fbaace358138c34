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

#include "telegraph/noise.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <string>

#include "telegraph/parallel.hpp"

namespace telegraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("TELEGRAPH_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index,
                          std::uint64_t stream) {
  return splitmix64(splitmix64(splitmix64(master_seed) ^ index) ^
                    (stream * 0xD1B54A32D192ED03ULL));
}

void fill_rtn(double gamma, const TimeGrid& grid, Engine& rng,
              std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(grid.n_steps) + 1);
  double value = (rng() >> 63) ? 1.0 : -1.0;
  out[0] = value;
  if (gamma <= 0.0) {
    std::fill(out.begin(), out.end(), value);
    return;
  }
  std::exponential_distribution<double> wait(gamma);
  double next_flip = wait(rng);
  for (std::int64_t k = 1; k <= grid.n_steps; ++k) {
    const double t = grid.time(k);
    while (next_flip <= t) {
      value = -value;
      next_flip += wait(rng);
    }
    out[static_cast<std::size_t>(k)] = value;
  }
}

void fill_ou(double gamma, const TimeGrid& grid, Engine& rng,
             std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(grid.n_steps) + 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double decay = std::exp(-2.0 * gamma * grid.dt);
  // 1 - e^{-4 gamma dt} without cancellation for small gamma dt.
  const double kick = std::sqrt(-std::expm1(-4.0 * gamma * grid.dt));
  double value = normal(rng);
  out[0] = value;
  for (std::int64_t k = 1; k <= grid.n_steps; ++k) {
    value = value * decay + kick * normal(rng);
    out[static_cast<std::size_t>(k)] = value;
  }
}

NoiseTrajectory sample_rtn(const ModelParams& p, const TimeGrid& grid,
                           std::uint64_t seed) {
  validate(grid);
  if (!(p.gamma >= 0.0)) throw InvalidArgument("gamma must be non-negative");
  Engine rng(seed);
  NoiseTrajectory traj{NoiseKind::kRtn, grid.dt, {}};
  fill_rtn(p.gamma, grid, rng, traj.values);
  return traj;
}

NoiseTrajectory sample_ou(const ModelParams& p, const TimeGrid& grid,
                          std::uint64_t seed) {
  validate(grid);
  if (!(p.gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  Engine rng(seed);
  NoiseTrajectory traj{NoiseKind::kOu, grid.dt, {}};
  fill_ou(p.gamma, grid, rng, traj.values);
  return traj;
}

NoiseTrajectory sample_noise(NoiseKind kind, const ModelParams& p,
                             const TimeGrid& grid, std::uint64_t seed) {
  return kind == NoiseKind::kRtn ? sample_rtn(p, grid, seed)
                                 : sample_ou(p, grid, seed);
}

double lorentzian_spectrum(double gamma, double w) {
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  return 4.0 * gamma / (4.0 * gamma * gamma + w * w);
}

void write_trajectory_csv(std::ostream& out, const NoiseTrajectory& traj) {
  out << "t,B\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t k = 0; k < traj.values.size(); ++k)
    out << static_cast<double>(k) * traj.dt << ',' << traj.values[k] << '\n';
}

}  // namespace telegraph
