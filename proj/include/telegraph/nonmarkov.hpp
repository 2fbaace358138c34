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

// Non-Markovianity witnesses for the single-qubit RTN channel.
//
// BLP: the largest sum of positive increments of the trace distance over
// antipodal pure pairs n, -n, for which D(t) = |T(t) n|.
// RHP: the sum of positive increments of the negativity of
// (Lambda_t x I)(|Psi+><Psi+|).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "telegraph/bloch.hpp"
#include "telegraph/correlations.hpp"
#include "telegraph/mc.hpp"
#include "telegraph/noise.hpp"
#include "telegraph/types.hpp"

namespace telegraph::nonmarkov {

inline constexpr double kDefaultTailEps = 1e-6;

/// max(8 tau, tau ln(10 / tail_eps)) with tau the exact slowest decay time;
/// the factor 10 absorbs the mode amplitudes.
double default_horizon(const ModelParams& p, double tail_eps = kDefaultTailEps);

inline constexpr std::int64_t kMaxDefaultSteps = 2000000;

/// Grid over [0, horizon] with dt = min(period / 40, tau / 40, 0.05,
/// 0.5 / fastest decay rate), period from the fastest eigenfrequency. The
/// horizon is cut to kMaxDefaultSteps steps; results on a cut horizon
/// report converged = false through their tail.
TimeGrid default_grid(const ModelParams& p, double horizon);

struct BLPSearchConfig {
  int azimuth_samples = 180;  // scan of phi in [0, pi) on the equator
  int polar_samples = 18;     // coarse off-equator check in theta
  double refinement_tol = 1e-7;  // radians
  double tail_eps = kDefaultTailEps;
  double horizon = 0.0;             // 0: default_horizon
  std::optional<TimeGrid> grid;     // unset: default_grid
};

struct NonMarkovResult {
  double value = 0.0;
  /// Antipodal pair attaining the BLP value (unused for RHP).
  std::array<BlochVector, 2> optimal_pair{};
  double theta = 0.0;
  double phi = 0.0;
  MeasureCurve curve;
  /// Norm of T at the horizon (BLP) or final negativity (RHP).
  double tail = 0.0;
  bool converged = true;
  /// Integral of |dE/dt| (RHP only), for comparison.
  double literal_abs_integral = 0.0;
};

NonMarkovResult blp_measure(const ModelParams& p,
                            const BLPSearchConfig& cfg = {});

/// Uses default_grid(p, default_horizon(p)) when no grid is given.
NonMarkovResult rhp_measure(const ModelParams& p,
                            const std::optional<TimeGrid>& grid = std::nullopt);

/// Lambda x I on Bloch coordinates: a -> T a, b -> b, C -> T C.
GeneralizedBlochVector apply_channel_one_side(const Mat3& t,
                                              const GeneralizedBlochVector& v);

/// Sum of positive increments of a sampled curve.
double positive_increments(const std::vector<double>& values);

/// Sum of upswings of at least `threshold` between a valley and the next
/// peak; smaller wiggles are treated as noise.
double significant_increments(const std::vector<double>& values,
                              double threshold);

/// Same with a standard error per sample: an upswing from valley i to
/// peak j counts when it exceeds n_sigma * hypot(sigma_i, sigma_j).
double significant_increments(const std::vector<double>& values,
                              const std::vector<double>& sigma,
                              double n_sigma);

struct ProbeResult {
  MeasureCurve curve;
  /// Revival sum with the noise threshold applied.
  double increments = 0.0;
  /// Raw sum of positive grid increments, noise included.
  double raw_increments = 0.0;
  /// Three times the largest standard error of D along the curve.
  double threshold = 0.0;
  bool inconclusive = false;
};

/// Trace distance between two initial qubit states evolved under OU noise
/// with shared trajectories. Upswings smaller than three standard errors of
/// D (from the ensemble covariance) are ignored; no surviving upswing flags
/// the probe inconclusive.
ProbeResult trace_distance_probe_ou(const ModelParams& p,
                                    const std::pair<QubitState, QubitState>& pair,
                                    const TimeGrid& grid,
                                    const EnsembleConfig& ensemble,
                                    const mc::McOptions& options = {});

}  // namespace telegraph::nonmarkov
