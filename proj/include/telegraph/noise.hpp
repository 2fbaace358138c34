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

// Seeded samplers for random telegraph noise and the Ornstein-Uhlenbeck
// process, both with autocorrelation exp(-2 gamma |t - t'|) and unit
// variance.

#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "telegraph/types.hpp"

namespace telegraph {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Seed for stream `stream` of trajectory `index`, a SplitMix64 hash of the
/// triple. Streams are independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index,
                          std::uint64_t stream = 0);

struct EnsembleConfig {
  std::int64_t n_realizations = 100000;
  std::uint64_t master_seed = kDefaultSeed;
};

struct NoiseTrajectory {
  NoiseKind kind = NoiseKind::kRtn;
  double dt = 0.0;
  std::vector<double> values;  // B(t_0), ..., B(t_n)
};

/// RTN on the grid: B(0) = +-1 with probability 1/2, switching events at
/// exponential waiting times of rate gamma. B(t_k) is the exact value of
/// the process at t_k.
NoiseTrajectory sample_rtn(const ModelParams& p, const TimeGrid& grid,
                           std::uint64_t seed);

/// Stationary OU on the grid by the exact AR(1) update
/// B_{k+1} = B_k e^{-2 gamma dt} + sqrt(1 - e^{-4 gamma dt}) xi_k.
NoiseTrajectory sample_ou(const ModelParams& p, const TimeGrid& grid,
                          std::uint64_t seed);

NoiseTrajectory sample_noise(NoiseKind kind, const ModelParams& p,
                             const TimeGrid& grid, std::uint64_t seed);

/// Allocation-free variants writing n_steps + 1 values into `out`.
void fill_rtn(double gamma, const TimeGrid& grid, Engine& rng,
              std::vector<double>& out);
void fill_ou(double gamma, const TimeGrid& grid, Engine& rng,
             std::vector<double>& out);

/// S(w) = 4 gamma / (4 gamma^2 + w^2).
double lorentzian_spectrum(double gamma, double w);

/// Writes `t,B` rows.
void write_trajectory_csv(std::ostream& out, const NoiseTrajectory& traj);

}  // namespace telegraph
