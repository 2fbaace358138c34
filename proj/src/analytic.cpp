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

#include "telegraph/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "telegraph/cubic.hpp"
#include "telegraph/linalg.hpp"

namespace telegraph::rtn {

namespace {

// (E_i)_{jk} = eps_{ijk}; the SO(3) generators are L_i = -i E_i.
Mat3 levi_civita(int i) {
  Mat3 e = Mat3::Zero();
  const int j = (i + 1) % 3;
  const int k = (i + 2) % 3;
  e(j, k) = 1.0;
  e(k, j) = -1.0;
  return e;
}

Eigen::Matrix<Complex, 3, 3> so3_generator(int i) {
  return Complex(0.0, -1.0) * levi_civita(i).cast<Complex>();
}

Eigen::Matrix2d fluctuator_rates(double gamma) {
  Eigen::Matrix2d m;
  m << gamma, -gamma, -gamma, gamma;  // gamma (I - s_1)
  return m;
}

const Eigen::Matrix2d& sigma3() {
  static const Eigen::Matrix2d s = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  return s;
}

// Real generator G with d/dt v = -G v in the rotation sense of the
// Hamiltonian: G = g (I - s_1) x I + 2 w I x E_z + 2 s_3 x E_x.
void check_params(const ModelParams& p) {
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma))
    throw InvalidArgument("gamma must be finite and non-negative");
  if (!std::isfinite(p.omega)) throw InvalidArgument("omega must be finite");
}

Mat6 physical_generator(const ModelParams& p) {
  check_params(p);
  Mat6 g = kron(fluctuator_rates(p.gamma), Mat3::Identity());
  g += 2.0 * p.omega * kron(Eigen::Matrix2d::Identity(), levi_civita(2));
  g += 2.0 * kron(sigma3(), levi_civita(0));
  return g;
}

Mat15 two_qubit_rotation(int i) {
  const Mat3 e = levi_civita(i);
  Mat15 q = Mat15::Zero();
  q.block<3, 3>(0, 0) = e;
  q.block<3, 3>(3, 3) = e;
  q.block<9, 9>(6, 6) =
      kron(e, Mat3::Identity()) + kron(Mat3::Identity(), e);
  return q;
}

Mat30 physical_generator_ce(const ModelParams& p) {
  check_params(p);
  Mat30 g = kron(fluctuator_rates(p.gamma), Mat15::Identity());
  g += 2.0 * p.omega *
       kron(Eigen::Matrix2d::Identity(), two_qubit_rotation(2));
  g += 2.0 * kron(sigma3(), two_qubit_rotation(0));
  return g;
}

// <x_f| M |i_f> over the two fluctuator states.
template <int N>
Eigen::Matrix<double, N, N> fluctuator_average(
    const Eigen::Matrix<double, 2 * N, 2 * N>& m) {
  return 0.5 * (m.template block<N, N>(0, 0) + m.template block<N, N>(0, N) +
                m.template block<N, N>(N, 0) + m.template block<N, N>(N, N));
}

// Propagates the 2N x N block [I; I] / sqrt(2) and projects on <x_f|.
template <int N, typename Visit>
void fluctuator_walk(const Eigen::Matrix<double, 2 * N, 2 * N>& generator,
                     const TimeGrid& grid, Visit&& visit) {
  validate(grid);
  using Big = Eigen::Matrix<double, 2 * N, 2 * N>;
  using Block = Eigen::Matrix<double, 2 * N, N>;
  const Big step = expm(Big(-grid.dt * generator));
  Block state;
  state.template topRows<N>().setIdentity();
  state.template bottomRows<N>().setIdentity();
  for (std::int64_t k = 0; k <= grid.n_steps; ++k) {
    visit(k, Eigen::Matrix<double, N, N>(0.5 * (state.template topRows<N>() +
                                                state.template bottomRows<N>())));
    if (k < grid.n_steps) state = step * state;
  }
}

template <int N>
std::vector<Eigen::Matrix<double, N, N>> fluctuator_series(
    const Eigen::Matrix<double, 2 * N, 2 * N>& generator,
    const TimeGrid& grid) {
  std::vector<Eigen::Matrix<double, N, N>> out;
  out.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  fluctuator_walk<N>(generator, grid,
                     [&](std::int64_t, const Eigen::Matrix<double, N, N>& t) {
                       out.push_back(t);
                     });
  return out;
}

}  // namespace

double EigenSet::slowest_decay_time() const {
  double rate = std::numeric_limits<double>::infinity();
  for (const auto* set : {&mu, &eta})
    for (const Complex& r : *set)
      if (-r.real() > 1e-14) rate = std::min(rate, -r.real());
  return 1.0 / rate;
}

double EigenSet::fastest_oscillation() const {
  double f = 0.0;
  for (const auto* set : {&mu, &eta})
    for (const Complex& r : *set) f = std::max(f, std::abs(r.imag()));
  return f;
}

double EigenSet::fastest_decay_rate() const {
  double rate = 0.0;
  for (const auto* set : {&mu, &eta})
    for (const Complex& r : *set) rate = std::max(rate, -r.real());
  return rate;
}

Mat6c build_P(const ModelParams& p) {
  check_params(p);
  const Complex i(0.0, 1.0);
  Mat6c m = kron(fluctuator_rates(p.gamma).cast<Complex>(),
                 Eigen::Matrix<Complex, 3, 3>::Identity());
  m -= 2.0 * i * p.omega *
       kron(Eigen::Matrix2cd::Identity(), so3_generator(2));
  m -= 2.0 * i * kron(sigma3().cast<Complex>(), so3_generator(0));
  return m;
}

namespace {

MonicCubic mu_cubic(const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  return {2.0 * p.gamma, 4.0 * (1.0 + w2), 8.0 * w2 * p.gamma};
}

MonicCubic eta_cubic(const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  return {4.0 * p.gamma, 4.0 * (1.0 + p.gamma * p.gamma + w2), 8.0 * p.gamma};
}

}  // namespace

EigenSet eigen_cubics(const ModelParams& p) {
  if (!(p.gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  return {solve_cubic(mu_cubic(p)), solve_cubic(eta_cubic(p))};
}

CubicResiduals cubic_residuals(const ModelParams& p, const EigenSet& e) {
  CubicResiduals r;
  const MonicCubic fm = mu_cubic(p);
  const MonicCubic fe = eta_cubic(p);
  for (const Complex& x : e.mu) r.mu = std::max(r.mu, fm.relative_residual(x));
  for (const Complex& x : e.eta)
    r.eta = std::max(r.eta, fe.relative_residual(x));
  return r;
}

double root_map_mismatch(const ModelParams& p, const EigenSet& e) {
  std::array<Complex, 3> mapped;
  for (int k = 0; k < 3; ++k) mapped[k] = -e.mu[k] - 2.0 * p.gamma;
  std::array<int, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int k = 0; k < 3; ++k)
      worst = std::max(worst, std::abs(mapped[k] - e.eta[perm[k]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double real_region_threshold() { return 1.0 / (2.0 * std::sqrt(2.0)); }

std::optional<std::pair<double, double>> real_region_boundaries(double omega) {
  if (!(omega >= 0.0)) throw InvalidArgument("omega must be non-negative");
  if (omega == 0.0)
    return std::make_pair(2.0, std::numeric_limits<double>::infinity());
  const double w2 = omega * omega;
  // Quadratic in x = gamma^2.
  const double a = 4.0 * w2;
  const double b = 8.0 * w2 * w2 - 20.0 * w2 - 1.0;
  const double c = 4.0 * std::pow(w2 + 1.0, 3);
  double disc = b * b - 4.0 * a * c;
  // Rounding at the threshold itself can push the discriminant slightly
  // negative.
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * b * b;
  if (disc < 0.0) {
    if (disc < -tol || omega > real_region_threshold() * (1.0 + 1e-12))
      return std::nullopt;
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  // b < 0 throughout the admissible range, so -b + root has no cancellation.
  const double x_hi = (-b + root) / (2.0 * a);
  const double x_lo = c / (a * x_hi);
  return std::make_pair(std::sqrt(x_lo), std::sqrt(x_hi));
}

double limiting_decay_time(const ModelParams& p, Regime regime) {
  if (regime == Regime::kFast) return p.gamma;
  const double w2 = p.omega * p.omega;
  if (p.omega > 1.0 / std::sqrt(2.0)) return (1.0 + w2) / p.gamma;
  return 0.5 * (1.0 + 1.0 / w2) / p.gamma;
}

Mat3 transfer_single(const ModelParams& p, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  return fluctuator_average<3>(expm(Mat6(-t * physical_generator(p))));
}

std::vector<Mat3> transfer_single_series(const ModelParams& p,
                                         const TimeGrid& grid) {
  return fluctuator_series<3>(physical_generator(p), grid);
}

void for_each_transfer_single(
    const ModelParams& p, const TimeGrid& grid,
    const std::function<void(std::int64_t, const Mat3&)>& visit) {
  fluctuator_walk<3>(physical_generator(p), grid, visit);
}

Mat3 transfer_single_literal(const ModelParams& p, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  const Mat6c e = expm(Mat6c(-t * build_P(p)));
  const Eigen::Matrix<Complex, 3, 3> avg =
      0.5 * (e.block<3, 3>(0, 0) + e.block<3, 3>(0, 3) +
             e.block<3, 3>(3, 0) + e.block<3, 3>(3, 3));
  return avg.real();
}

ClosedFormElements transfer_elements_closed_form(const ModelParams& p,
                                                 double t) {
  const EigenSet e = eigen_cubics(p);
  const double g = p.gamma;
  const double w = p.omega;
  const double w2 = w * w;
  const double g2 = g * g;
  const auto& [m1, m2, m3] = e.mu;
  const auto& [e1, e2, e3] = e.eta;
  auto ex = [t](Complex r) { return std::exp(r * t); };

  // Denominators shared by several terms.
  auto d_plus = [&](Complex m) {
    return 4.0 * (1.0 - w2 * (2.0 * g2 + w2)) + 2.0 * g * m * (1.0 - 6.0 * w2) +
           m * m * (1.0 - 5.0 * w2);
  };
  auto d_minus = [&](Complex m) {
    return 8.0 * g2 * w2 - 4.0 - 2.0 * g * m * (1.0 - 6.0 * w2) -
           m * m * (1.0 - 5.0 * w2) + 4.0 * w2 * w2;
  };
  auto d_t22 = [&](Complex m) {
    return 4.0 * (1.0 + 2.0 * w2 * (1.0 - g2) + w2 * w2) +
           2.0 * g * m * (1.0 - 2.0 * w2) + m * m * (1.0 + w2);
  };
  auto d_eta = [&](Complex n) {
    return 8.0 * (1.0 - w2 * (g2 + w2)) + 4.0 * g * n * (1.0 - 4.0 * w2) +
           2.0 * n * n * (1.0 - 5.0 * w2);
  };
  const Complex d_eta3 =
      8.0 * (g2 * w2 - 1.0 + w2 * w2) -
      2.0 * e3 * (2.0 * g * (1.0 - 4.0 * w2) + e3 * (1.0 - 5.0 * w2));

  const std::array<Complex, 10> denominators = {
      d_plus(m1),  d_plus(m2),  d_plus(m3), d_minus(m1), d_minus(m2),
      d_minus(m3), d_t22(m3),   d_eta(e1),  d_eta(e2),   d_eta3};

  ClosedFormElements out;
  out.min_denominator = std::numeric_limits<double>::infinity();
  for (const Complex& d : denominators)
    out.min_denominator = std::min(out.min_denominator, std::abs(d));
  out.reliable = out.min_denominator >= 1e-8;

  const Complex t11 =
      ex(m2) * (m1 * m3 * (1.0 - 2.0 * w2) -
                2.0 * w2 * (2.0 * g2 + g * m2 - 4.0 * w2)) /
          d_plus(m2) +
      ex(m3) * (4.0 - 4.0 * w2 * (g2 + 1.0) + 2.0 * g * m3 * (1.0 - 3.0 * w2) +
                m3 * m3 * (1.0 - 2.0 * w2)) /
          d_plus(m3) +
      ex(m1) * (2.0 * g * m3 * w2 +
                m2 * (2.0 * g * w2 + m3 * (1.0 - 2.0 * w2)) + 8.0 * w2 * w2) /
          d_plus(m1);

  const Complex t12 =
      w * ex(m2) * (4.0 * w2 * (3.0 * g + m2) - g * m1 * m3) / d_plus(m2) +
      w * ex(m1) * (4.0 * w2 * (m3 - g) + m2 * (g * m3 + 4.0 * w2)) /
          d_minus(m1) +
      w * ex(m3) *
          (m3 * (2.0 * g2 + g * m3 - 4.0 * w2) + 4.0 * g * (1.0 - 2.0 * w2)) /
          d_minus(m3);

  const Complex t22 =
      2.0 * g * w2 *
      (ex(m1) * (m2 * (g - m3) + g * m3 + 4.0 * (1.0 + w2)) /
           (g * d_plus(m1)) +
       ex(m2) * (2.0 * g2 + g * m2 - 4.0 + m1 * m3 - 4.0 * w2) /
           (g * d_minus(m2)) -
       (2.0 * g + m3) * ex(m3) / d_t22(m3));

  // The leading constant of the eta_2 term is 8 (cf. the eta_1 term).
  const Complex t33 =
      2.0 * w2 *
      ((8.0 - e1 * e3) * ex(e2) / d_eta(e2) +
       (8.0 - e2 * e3) * ex(e1) / d_eta(e1) +
       ex(e3) * (4.0 * g * e3 + 4.0 * (g2 - 1.0 + w2) + e3 * e3) / d_eta3);

  out.t11 = t11.real();
  out.t12 = t12.real();
  out.t22 = t22.real();
  out.t33 = t33.real();
  return out;
}

Mat30c build_P2_ce(const ModelParams& p) {
  check_params(p);
  // -2 i Q_i is real because L_i = -i E_i.
  Mat30 m = kron(fluctuator_rates(p.gamma), Mat15::Identity());
  m -= 2.0 * (p.omega * kron(Eigen::Matrix2d::Identity(), two_qubit_rotation(2)) +
              kron(sigma3(), two_qubit_rotation(0)));
  return m.cast<Complex>();
}

Mat15 transfer_two_ce(const ModelParams& p, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  return fluctuator_average<15>(expm(Mat30(-t * physical_generator_ce(p))));
}

std::vector<Mat15> transfer_two_ce_series(const ModelParams& p,
                                          const TimeGrid& grid) {
  return fluctuator_series<15>(physical_generator_ce(p), grid);
}

Mat15 transfer_two_from_single(const Mat3& t) {
  Mat15 out = Mat15::Zero();
  out.block<3, 3>(0, 0) = t;
  out.block<3, 3>(3, 3) = t;
  out.block<9, 9>(6, 6) = kron(t, t);
  return out;
}

Mat15 transfer_two_ie(const ModelParams& p, double t) {
  return transfer_two_from_single(transfer_single(p, t));
}

GeneralizedBlochVector apply_transfer(const Mat15& t,
                                      const GeneralizedBlochVector& v) {
  return GeneralizedBlochVector::from_vector(t * v.to_vector());
}

}  // namespace telegraph::rtn
