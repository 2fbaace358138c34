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

// Entanglement, discord and state-distance measures. Entropies are in bits.
//
// Fidelity convention: F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2,
// the squared Uhlmann form. An average fidelity of 0.9999 therefore means an
// average fidelity complement below 1e-4.

#pragma once

#include <utility>
#include <vector>

#include "telegraph/bloch.hpp"
#include "telegraph/mc.hpp"
#include "telegraph/noise.hpp"
#include "telegraph/types.hpp"

namespace telegraph {

struct BellDiagonalCoords {
  Vec3 c = Vec3::Zero();
};

struct MeasureCurve {
  std::vector<double> times;
  std::vector<double> values;
};

/// 2 |sum of negative eigenvalues of the partial transpose|.
double negativity(const TwoQubitState& rho);

/// Base-2 entropy; eigenvalues below kPhysTol contribute nothing.
template <int D>
double von_neumann_entropy(const DensityMatrix<D>& rho);

double mutual_information(const TwoQubitState& rho);

/// Eigenvalues of the Bell-diagonal state with coordinates c, in the order
/// (1-c1-c2-c3, 1-c1+c2+c3, 1+c1-c2+c3, 1+c1+c2-c3) / 4.
Eigen::Vector4d bell_diagonal_eigenvalues(const BellDiagonalCoords& c);

/// Mutual information minus the classical correlation
/// C = (1-c)/2 log2(1-c) + (1+c)/2 log2(1+c), c = max |c_j|.
/// Throws InvalidArgument outside the tetrahedron.
double discord_bell_diagonal(const BellDiagonalCoords& c);

/// Discord of a state with maximally mixed marginals, via its tetrahedron
/// coordinates. Throws InvalidArgument if a marginal Bloch vector exceeds
/// `marginal_tol` in norm.
double discord(const TwoQubitState& rho, double marginal_tol = 1e-6);

template <int D>
double fidelity(const DensityMatrix<D>& rho, const DensityMatrix<D>& sigma);

template <int D>
double trace_distance(const DensityMatrix<D>& rho,
                      const DensityMatrix<D>& sigma);

/// Qubit fidelity Tr(rho sigma) + 2 sqrt(det rho det sigma).
double fidelity_qubit_closed_form(const QubitState& rho,
                                  const QubitState& sigma);

/// 1 - F(reference(t_k), rho_RTN(t_k)), with rho_RTN propagated exactly
/// from rho0 at parameters p_rtn. reference[k] is the state at grid time k.
MeasureCurve fidelity_complement_curve(const std::vector<QubitState>& reference,
                                       const ModelParams& p_rtn,
                                       const QubitState& rho0,
                                       const TimeGrid& grid);

/// Same, with the reference obtained by Monte Carlo at p_ou using noise of
/// kind `reference_kind` (OU unless a self-comparison is wanted).
MeasureCurve fidelity_complement_curve(const ModelParams& p_ou,
                                       const ModelParams& p_rtn,
                                       const QubitState& rho0,
                                       const TimeGrid& grid,
                                       const EnsembleConfig& ensemble,
                                       NoiseKind reference_kind = NoiseKind::kOu,
                                       const mc::McOptions& options = {});

/// (1/T) times the composite trapezoid integral of the curve over [0, T].
/// T must lie on the curve's time grid.
double average_over(const MeasureCurve& curve, double horizon);

/// Richardson-type estimate of the trapezoid error of average_over, from
/// the same rule on every second point.
double average_quadrature_error(const MeasureCurve& curve, double horizon);

double average_fidelity_complement(const ModelParams& p_ou,
                                   const ModelParams& p_rtn,
                                   const QubitState& rho0, double horizon,
                                   const TimeGrid& grid,
                                   const EnsembleConfig& ensemble,
                                   NoiseKind reference_kind = NoiseKind::kOu,
                                   const mc::McOptions& options = {});

struct GammaSearchOptions {
  int coarse_points = 16;       // log-spaced scan
  double log_tolerance = 1e-4;  // golden-section stop on |d ln gamma|
  NoiseKind reference_kind = NoiseKind::kOu;
  mc::McOptions mc;
};

struct GammaOptimum {
  double gamma_star = 0.0;
  double value = 0.0;
  /// False when the scanned objective varies by less than the quadrature
  /// error, i.e. no minimum can be located.
  bool resolved = true;
  double quadrature_error = 0.0;
  std::vector<std::pair<double, double>> scan;  // (gamma, value)
};

/// Minimizes the average fidelity complement over gamma_RTN in
/// [search.first, search.second]. The Monte Carlo reference is computed
/// once and shared by all candidates.
GammaOptimum optimize_gamma_rtn(const ModelParams& p_ou,
                                const QubitState& rho0, double horizon,
                                std::pair<double, double> search,
                                const TimeGrid& grid,
                                const EnsembleConfig& ensemble,
                                const GammaSearchOptions& options = {});

}  // namespace telegraph
