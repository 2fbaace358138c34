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

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace telegraph {

using Complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec15 = Eigen::Matrix<double, 15, 1>;
using Mat15 = Eigen::Matrix<double, 15, 15>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat6c = Eigen::Matrix<Complex, 6, 6>;
using Mat30 = Eigen::Matrix<double, 30, 30>;
using Mat30c = Eigen::Matrix<Complex, 30, 30>;

/// Physicality tolerance shared by every state check in the library.
inline constexpr double kPhysTol = 1e-9;

/// Thrown for invalid arguments: non-physical states, bad parameters,
/// malformed configuration. The CLI maps it to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative or statistical procedure cannot produce a
/// trustworthy answer. The CLI maps it to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit splitting and noise switching rate, both in units of the
/// qubit-noise coupling (which is fixed to 1).
struct ModelParams {
  double omega = 1.0;
  double gamma = 1.0;
};

enum class NoiseKind { kRtn, kOu };

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& s);

/// Uniform time grid t_k = k * dt, k = 0..n_steps.
struct TimeGrid {
  double dt = 0.05;
  std::int64_t n_steps = 200;

  double time(std::int64_t k) const { return static_cast<double>(k) * dt; }
  double horizon() const { return static_cast<double>(n_steps) * dt; }

  /// Grid covering [0, horizon] with step close to (and not above)
  /// `max_dt`.
  static TimeGrid covering(double horizon, double max_dt);

  /// Default simulation grid: dt = 0.05 / max(1, omega, gamma), refined
  /// so that at least 200 steps cover the horizon.
  static TimeGrid default_for(const ModelParams& p, double horizon);
};

void validate(const TimeGrid& grid);

}  // namespace telegraph
