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

// Exact random-telegraph-noise dynamics.
//
// The Bloch vector of a qubit driven by H = omega s_z + B(t) s_x, with B a
// symmetric telegraph process of switching rate gamma, is augmented by the
// two fluctuator states. The augmented vector obeys a linear equation with a
// constant 6x6 generator, so the ensemble-averaged transfer matrix is a
// partial inner product of its exponential:
//
//   T(t) = <x_f| exp(-t G) |i_f>,   |x_f> = |i_f> = (|+> + |->) / sqrt(2).
//
// Two qubits use the 15-dimensional generalized Bloch vector; in a common
// environment the generator is 30x30, in independent environments T2 is
// blockdiag(T, T, T x T).
//
// Rotation sense: build_P returns the generator with the SO(3) generators
// entering as (gamma - gamma s_1) x I - 2 i omega I x L_z - 2 i s_3 x L_x,
// (L_i)_{jk} = -i eps_{ijk}. Its exponential rotates Bloch vectors against
// the sense of the Hamiltonian above, which only flips the sign of the
// off-diagonal transfer elements (T = D T_P D with D = diag(1, -1, 1)).
// Every transfer-matrix function below returns the map that agrees with
// direct propagation of H, i.e. the one realized by mc::evolve_*.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "telegraph/bloch.hpp"
#include "telegraph/types.hpp"

namespace telegraph::rtn {

/// Roots of
///   mu^3 + 2 g mu^2 + 4 (1 + w^2) mu + 8 w^2 g = 0           (mu)
///   eta^3 + 4 g eta^2 + 4 (1 + g^2 + w^2) eta + 8 g = 0       (eta)
/// which together are the eigenvalues of -P. Each triple is sorted by
/// descending real part, then ascending imaginary part.
struct EigenSet {
  std::array<Complex, 3> mu;
  std::array<Complex, 3> eta;

  /// 1 / (smallest nonzero decay rate) over all six roots.
  double slowest_decay_time() const;
  /// Largest |Im| over all six roots (angular frequency).
  double fastest_oscillation() const;
  /// Largest decay rate |Re| over all six roots.
  double fastest_decay_rate() const;
};

struct CubicResiduals {
  double mu = 0.0;   // max relative residual over the mu roots
  double eta = 0.0;  // max relative residual over the eta roots
};

Mat6c build_P(const ModelParams& p);

EigenSet eigen_cubics(const ModelParams& p);
CubicResiduals cubic_residuals(const ModelParams& p, const EigenSet& e);

/// Maximum distance between {-mu - 2 gamma} and {eta} under the best
/// matching of the two triples.
double root_map_mismatch(const ModelParams& p, const EigenSet& e);

/// Boundaries gamma_1 <= gamma_2 of the region where all six roots are
/// real: the positive roots of
///   4 w^2 g^4 + (8 w^4 - 20 w^2 - 1) g^2 + 4 (w^2 + 1)^3 = 0.
/// Empty for omega above 1 / (2 sqrt 2); at omega = 0 the region is
/// (2, +inf).
std::optional<std::pair<double, double>> real_region_boundaries(double omega);

/// omega at which the two boundaries merge.
double real_region_threshold();

enum class Regime { kFast, kSlow };

/// Asymptotic longest decay time. The regime is not checked against the
/// parameters: FAST assumes gamma >> omega, SLOW assumes gamma << omega.
double limiting_decay_time(const ModelParams& p, Regime regime);

/// Single-qubit transfer matrix at time t >= 0.
Mat3 transfer_single(const ModelParams& p, double t);

/// T(t_k) for every point of the grid, by exact stepping of the augmented
/// vector with exp(-dt G). Element 0 is the identity.
std::vector<Mat3> transfer_single_series(const ModelParams& p,
                                         const TimeGrid& grid);

/// Streams (k, T(t_k)) over the grid without storing the series.
void for_each_transfer_single(
    const ModelParams& p, const TimeGrid& grid,
    const std::function<void(std::int64_t, const Mat3&)>& visit);

/// Transfer matrix in the rotation sense of build_P (see header comment).
Mat3 transfer_single_literal(const ModelParams& p, double t);

struct ClosedFormElements {
  double t11 = 0.0;
  double t12 = 0.0;  // T21 = -T12
  double t22 = 0.0;
  double t33 = 0.0;
  /// Smallest |denominator| met; below 1e-8 the values are not trusted.
  double min_denominator = 0.0;
  bool reliable = false;
};

/// Closed-form partial-fraction expressions for the nonzero elements of the
/// single-qubit transfer matrix, evaluated from eigen_cubics.
ClosedFormElements transfer_elements_closed_form(const ModelParams& p,
                                                 double t);

/// 30x30 common-environment generator,
///   (g I - g s_1) x I_15 - 2 i (w I x Q_z + s_3 x Q_x),
/// Q_i = blockdiag(L_i, L_i, L_i x I_3 + I_3 x L_i).
Mat30c build_P2_ce(const ModelParams& p);

Mat15 transfer_two_ce(const ModelParams& p, double t);
std::vector<Mat15> transfer_two_ce_series(const ModelParams& p,
                                          const TimeGrid& grid);

/// blockdiag(T, T, T x T).
Mat15 transfer_two_from_single(const Mat3& t);
Mat15 transfer_two_ie(const ModelParams& p, double t);

GeneralizedBlochVector apply_transfer(const Mat15& t,
                                      const GeneralizedBlochVector& v);

}  // namespace telegraph::rtn
