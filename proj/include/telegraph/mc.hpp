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

// Monte Carlo propagation of H = omega s_z + B(t) s_x over sampled noise
// trajectories. Each step applies the exact unitary for B frozen at its
// sampled value, so the only discretization error is in the noise.

#pragma once

#include <string>
#include <vector>

#include "telegraph/bloch.hpp"
#include "telegraph/noise.hpp"
#include "telegraph/types.hpp"

namespace telegraph::mc {

enum class SamplingRule {
  kLeft,      // B on [t_k, t_{k+1}) is B(t_k)
  kMidpoint,  // B on [t_k, t_{k+1}) is B(t_k + dt / 2)
};

enum class Topology {
  kCommon,          // both qubits see the same B(t)
  kIndependent,     // independent trajectories of the same statistics
  kFirstQubitOnly,  // qubit A evolves, qubit B is left untouched
};

struct McOptions {
  SamplingRule rule = SamplingRule::kLeft;
  /// B(t) is multiplied by this factor; 0 gives noiseless rotation.
  double noise_scale = 1.0;
  /// Worker threads; 0 means thread_count().
  int threads = 0;
};

template <int D>
struct EvolutionResult {
  std::vector<double> times;
  std::vector<DensityMatrix<D>> states;
  /// Largest standard error of any matrix element at each time.
  std::vector<double> stderr_per_time;
  double stderr_max = 0.0;
};

struct BlochEnsemble {
  std::vector<double> times;
  std::vector<Vec3> mean;
  /// Covariance of the ensemble mean (sample covariance / N).
  std::vector<Mat3> mean_covariance;
};

/// exp(-i dt (omega s_z + b s_x)).
Mat2c step_unitary(double omega, double b, double dt);

EvolutionResult<2> evolve_single_mc(const ModelParams& p, NoiseKind kind,
                                    const QubitState& rho0,
                                    const TimeGrid& grid,
                                    const EnsembleConfig& ensemble,
                                    const McOptions& options = {});

EvolutionResult<4> evolve_two_mc(const ModelParams& p, NoiseKind kind,
                                 Topology topology, const TwoQubitState& rho0,
                                 const TimeGrid& grid,
                                 const EnsembleConfig& ensemble,
                                 const McOptions& options = {});

/// Ensemble of rotated copies of an arbitrary real 3-vector v0 (not
/// necessarily a Bloch vector: the rotations act linearly, so a difference
/// of two Bloch vectors can be propagated directly).
BlochEnsemble evolve_bloch_mc(const ModelParams& p, NoiseKind kind,
                              const Vec3& v0, const TimeGrid& grid,
                              const EnsembleConfig& ensemble,
                              const McOptions& options = {});

std::string to_string(Topology topology);
Topology topology_from_string(const std::string& s);

}  // namespace telegraph::mc
