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

#include "telegraph/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "telegraph/analytic.hpp"

namespace telegraph {

namespace {

double xlog2x(double x) { return x > kPhysTol ? x * std::log2(x) : 0.0; }

// Hermitian part, so that tiny asymmetries from averaging do not leak into
// the eigensolver.
template <int D>
Eigen::Matrix<Complex, D, D> hermitian(const Eigen::Matrix<Complex, D, D>& m) {
  return 0.5 * (m + m.adjoint());
}

std::size_t index_of_time(const MeasureCurve& curve, double horizon) {
  if (curve.times.size() < 2)
    throw InvalidArgument("curve needs at least two samples");
  const double dt = curve.times[1] - curve.times[0];
  const double k = horizon / dt;
  const double kr = std::round(k);
  if (!(horizon > 0.0) || std::abs(k - kr) > 1e-6 * std::max(1.0, kr) ||
      kr >= static_cast<double>(curve.times.size()))
    throw InvalidArgument("horizon must be a positive grid time");
  return static_cast<std::size_t>(kr);
}

double trapezoid_mean(const MeasureCurve& curve, std::size_t last,
                      std::size_t stride) {
  double sum = 0.0;
  for (std::size_t k = 0; k + stride <= last; k += stride)
    sum += 0.5 * (curve.values[k] + curve.values[k + stride]) *
           (curve.times[k + stride] - curve.times[k]);
  return sum / curve.times[last];
}

}  // namespace

double negativity(const TwoQubitState& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(
      hermitian<4>(partial_transpose(rho)), Eigen::EigenvaluesOnly);
  double negative = 0.0;
  for (int i = 0; i < 4; ++i) negative += std::min(0.0, es.eigenvalues()(i));
  return 2.0 * std::abs(negative);
}

template <int D>
double von_neumann_entropy(const DensityMatrix<D>& rho) {
  const auto ev = eigenvalues(rho);
  double s = 0.0;
  for (int i = 0; i < D; ++i) s -= xlog2x(ev(i));
  return std::max(0.0, s);
}

template double von_neumann_entropy(const DensityMatrix<2>&);
template double von_neumann_entropy(const DensityMatrix<4>&);

double mutual_information(const TwoQubitState& rho) {
  return von_neumann_entropy(reduced_first(rho)) +
         von_neumann_entropy(reduced_second(rho)) - von_neumann_entropy(rho);
}

Eigen::Vector4d bell_diagonal_eigenvalues(const BellDiagonalCoords& c) {
  const double c1 = c.c(0), c2 = c.c(1), c3 = c.c(2);
  return Eigen::Vector4d(1.0 - c1 - c2 - c3, 1.0 - c1 + c2 + c3,
                         1.0 + c1 - c2 + c3, 1.0 + c1 + c2 - c3) /
         4.0;
}

double discord_bell_diagonal(const BellDiagonalCoords& c) {
  if (!c.c.allFinite()) throw InvalidArgument("coordinates must be finite");
  const Eigen::Vector4d lambda = bell_diagonal_eigenvalues(c);
  if (lambda.minCoeff() < -kPhysTol)
    throw InvalidArgument("coordinates outside the Bell tetrahedron "
                          "(negative eigenvalue " +
                          std::to_string(lambda.minCoeff()) + ")");
  double mutual = 2.0;
  for (int i = 0; i < 4; ++i) mutual += xlog2x(lambda(i));
  const double cm = std::min(1.0, c.c.cwiseAbs().maxCoeff());
  const double classical =
      0.5 * xlog2x(1.0 - cm) + 0.5 * xlog2x(1.0 + cm);
  return std::clamp(mutual - classical, 0.0, 1.0);
}

double discord(const TwoQubitState& rho, double marginal_tol) {
  const GeneralizedBlochVector v = generalized_bloch_from_density(rho);
  if (v.a.norm() > marginal_tol || v.b.norm() > marginal_tol)
    throw InvalidArgument("discord requires maximally mixed marginals");
  // Local rotations act as C -> O_A C O_B^T, so the tetrahedron coordinates
  // are the singular values with the sign of det C carried by the last one.
  Eigen::JacobiSVD<Mat3> svd(v.c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Vec3 c = svd.singularValues();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0)
    c(2) = -c(2);
  return discord_bell_diagonal({c});
}

template <int D>
double fidelity(const DensityMatrix<D>& rho, const DensityMatrix<D>& sigma) {
  using M = Eigen::Matrix<Complex, D, D>;
  Eigen::SelfAdjointEigenSolver<M> es(hermitian<D>(rho.matrix()));
  const auto sqrt_ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const M sqrt_rho = es.eigenvectors() *
                     sqrt_ev.template cast<Complex>().asDiagonal() *
                     es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<M> inner(
      hermitian<D>(M(sqrt_rho * sigma.matrix() * sqrt_rho)),
      Eigen::EigenvaluesOnly);
  const double root = inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

template double fidelity(const DensityMatrix<2>&, const DensityMatrix<2>&);
template double fidelity(const DensityMatrix<4>&, const DensityMatrix<4>&);

template <int D>
double trace_distance(const DensityMatrix<D>& rho,
                      const DensityMatrix<D>& sigma) {
  using M = Eigen::Matrix<Complex, D, D>;
  Eigen::SelfAdjointEigenSolver<M> es(
      hermitian<D>(M(rho.matrix() - sigma.matrix())), Eigen::EigenvaluesOnly);
  return std::min(1.0, 0.5 * es.eigenvalues().cwiseAbs().sum());
}

template double trace_distance(const DensityMatrix<2>&,
                               const DensityMatrix<2>&);
template double trace_distance(const DensityMatrix<4>&,
                               const DensityMatrix<4>&);

double fidelity_qubit_closed_form(const QubitState& rho,
                                  const QubitState& sigma) {
  const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
  const double dr = std::max(0.0, rho.matrix().determinant().real());
  const double ds = std::max(0.0, sigma.matrix().determinant().real());
  return std::clamp(overlap + 2.0 * std::sqrt(dr * ds), 0.0, 1.0);
}

MeasureCurve fidelity_complement_curve(const std::vector<QubitState>& reference,
                                       const ModelParams& p_rtn,
                                       const QubitState& rho0,
                                       const TimeGrid& grid) {
  require_physical(rho0, "initial state");
  if (reference.size() != static_cast<std::size_t>(grid.n_steps) + 1)
    throw InvalidArgument("reference length does not match the grid");
  const auto transfers = rtn::transfer_single_series(p_rtn, grid);
  const Vec3 n0 = bloch_from_density(rho0).n;
  MeasureCurve curve;
  curve.times.reserve(transfers.size());
  curve.values.reserve(transfers.size());
  for (std::size_t k = 0; k < transfers.size(); ++k) {
    const QubitState rtn_state = density_from_bloch(BlochVector(transfers[k] * n0));
    curve.times.push_back(grid.time(static_cast<std::int64_t>(k)));
    curve.values.push_back(1.0 - fidelity(reference[k], rtn_state));
  }
  return curve;
}

MeasureCurve fidelity_complement_curve(const ModelParams& p_ou,
                                       const ModelParams& p_rtn,
                                       const QubitState& rho0,
                                       const TimeGrid& grid,
                                       const EnsembleConfig& ensemble,
                                       NoiseKind reference_kind,
                                       const mc::McOptions& options) {
  const auto ref =
      mc::evolve_single_mc(p_ou, reference_kind, rho0, grid, ensemble, options);
  return fidelity_complement_curve(ref.states, p_rtn, rho0, grid);
}

double average_over(const MeasureCurve& curve, double horizon) {
  return trapezoid_mean(curve, index_of_time(curve, horizon), 1);
}

double average_quadrature_error(const MeasureCurve& curve, double horizon) {
  const std::size_t last = index_of_time(curve, horizon);
  if (last % 2 != 0 || last < 4) return 0.0;
  return std::abs(trapezoid_mean(curve, last, 1) -
                  trapezoid_mean(curve, last, 2)) /
         3.0;
}

double average_fidelity_complement(const ModelParams& p_ou,
                                   const ModelParams& p_rtn,
                                   const QubitState& rho0, double horizon,
                                   const TimeGrid& grid,
                                   const EnsembleConfig& ensemble,
                                   NoiseKind reference_kind,
                                   const mc::McOptions& options) {
  return average_over(fidelity_complement_curve(p_ou, p_rtn, rho0, grid,
                                                ensemble, reference_kind,
                                                options),
                      horizon);
}

GammaOptimum optimize_gamma_rtn(const ModelParams& p_ou,
                                const QubitState& rho0, double horizon,
                                std::pair<double, double> search,
                                const TimeGrid& grid,
                                const EnsembleConfig& ensemble,
                                const GammaSearchOptions& options) {
  auto [lo, hi] = search;
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw InvalidArgument("search interval must satisfy 0 < lo < hi");
  if (options.coarse_points < 3)
    throw InvalidArgument("coarse scan needs at least 3 points");

  const auto ref = mc::evolve_single_mc(p_ou, options.reference_kind, rho0,
                                        grid, ensemble, options.mc);
  double quad_error = 0.0;
  auto objective = [&](double log_gamma) {
    const ModelParams p{p_ou.omega, std::exp(log_gamma)};
    const MeasureCurve c = fidelity_complement_curve(ref.states, p, rho0, grid);
    quad_error = std::max(quad_error, average_quadrature_error(c, horizon));
    return average_over(c, horizon);
  };

  GammaOptimum out;
  const double a = std::log(lo), b = std::log(hi);
  const int n = options.coarse_points;
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = a + (b - a) * i / (n - 1);
    fs[i] = objective(xs[i]);
    out.scan.emplace_back(std::exp(xs[i]), fs[i]);
  }
  const int best = static_cast<int>(
      std::min_element(fs.begin(), fs.end()) - fs.begin());

  double left = xs[std::max(0, best - 1)];
  double right = xs[std::min(n - 1, best + 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  double f1 = objective(x1), f2 = objective(x2);
  for (int iter = 0; iter < 200 && right - left > options.log_tolerance;
       ++iter) {
    if (f1 <= f2) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = objective(x1);
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = objective(x2);
    }
  }
  double x_best = f1 <= f2 ? x1 : x2;
  double f_best = std::min(f1, f2);
  if (fs[best] < f_best) {
    x_best = xs[best];
    f_best = fs[best];
  }
  out.gamma_star = std::exp(x_best);
  out.value = f_best;
  out.quadrature_error = quad_error;
  const auto [fmin, fmax] = std::minmax_element(fs.begin(), fs.end());
  out.resolved = (*fmax - *fmin) > quad_error;
  return out;
}

}  // namespace telegraph
