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

#include "telegraph/nonmarkov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "telegraph/analytic.hpp"

namespace telegraph::nonmarkov {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_gamma(const ModelParams& p) {
  if (!(p.gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  if (!std::isfinite(p.omega)) throw InvalidArgument("omega must be finite");
}

Vec3 direction(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta));
}

// Upper triangle of T^T T at every grid time, so that D(t)^2 = n^T M n.
struct GramSeries {
  std::vector<std::array<double, 6>> m;
  double tail = 0.0;

  GramSeries(const ModelParams& p, const TimeGrid& grid) {
    m.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
    Mat3 last = Mat3::Identity();
    rtn::for_each_transfer_single(p, grid, [&](std::int64_t, const Mat3& t) {
      const Mat3 g = t.transpose() * t;
      m.push_back({g(0, 0), g(1, 1), g(2, 2), g(0, 1), g(0, 2), g(1, 2)});
      last = g;
    });
    Eigen::SelfAdjointEigenSolver<Mat3> es(last, Eigen::EigenvaluesOnly);
    tail = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }

  double distance(std::size_t k, const Vec3& n) const {
    const auto& g = m[k];
    const double q = g[0] * n(0) * n(0) + g[1] * n(1) * n(1) +
                     g[2] * n(2) * n(2) +
                     2.0 * (g[3] * n(0) * n(1) + g[4] * n(0) * n(2) +
                            g[5] * n(1) * n(2));
    return std::sqrt(std::max(0.0, q));
  }

  double increments(double theta, double phi) const {
    const Vec3 n = direction(theta, phi);
    double sum = 0.0;
    double prev = distance(0, n);
    for (std::size_t k = 1; k < m.size(); ++k) {
      const double d = distance(k, n);
      if (d > prev) sum += d - prev;
      prev = d;
    }
    return sum;
  }
};

// Golden-section maximization of f on [a, b].
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int iter = 0; iter < 200 && b - a > tol; ++iter) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Positive increments of a sampled curve after replacing every interior
// local extremum by the extremum of f over the two neighbouring cells. The
// grid alone misses minima of |T n| near zero crossings.
template <typename F>
double refined_increments(const std::vector<double>& v, const TimeGrid& grid,
                          F&& f) {
  if (v.size() < 3) return positive_increments(v);
  const double tol = 1e-6 * grid.dt;
  std::vector<double> turns{v.front()};
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    const double lo = grid.time(static_cast<std::int64_t>(k - 1));
    const double hi = grid.time(static_cast<std::int64_t>(k + 1));
    if (v[k] > v[k - 1] && v[k] >= v[k + 1]) {
      turns.push_back(std::max(v[k], golden_max(f, lo, hi, tol).second));
    } else if (v[k] < v[k - 1] && v[k] <= v[k + 1]) {
      const auto neg = [&](double t) { return -f(t); };
      turns.push_back(std::min(v[k], -golden_max(neg, lo, hi, tol).second));
    }
  }
  turns.push_back(v.back());
  return positive_increments(turns);
}

// Compass search in (theta, phi); only strict improvements move the point.
void compass_refine(const GramSeries& gs, double& theta, double& phi,
                    double& value, double step, double tol) {
  while (step > tol) {
    bool moved = false;
    const std::array<std::pair<double, double>, 4> moves{
        {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}};
    for (const auto& [dth, dph] : moves) {
      const double th = std::clamp(theta + dth, 0.0, kPi);
      const double ph = phi + dph;
      const double v = gs.increments(th, ph);
      if (v > value) {
        theta = th;
        phi = ph;
        value = v;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
}

// Canonical representative of the pair {n, -n}: phi in [0, pi).
void canonicalize(double& theta, double& phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= kPi) {
    phi -= kPi;
    theta = kPi - theta;
  }
}

}  // namespace

double default_horizon(const ModelParams& p, double tail_eps) {
  require_positive_gamma(p);
  if (!(tail_eps > 0.0 && tail_eps < 1.0))
    throw InvalidArgument("tail_eps must lie in (0, 1)");
  const double tau = rtn::eigen_cubics(p).slowest_decay_time();
  return std::max(8.0, std::log(10.0 / tail_eps)) * tau;
}

TimeGrid default_grid(const ModelParams& p, double horizon) {
  require_positive_gamma(p);
  const rtn::EigenSet e = rtn::eigen_cubics(p);
  double dt = std::min(0.05, e.slowest_decay_time() / 40.0);
  const double w = e.fastest_oscillation();
  if (w > 0.0) dt = std::min(dt, 2.0 * kPi / w / 40.0);
  const double rate = e.fastest_decay_rate();
  if (rate > 0.0) dt = std::min(dt, 0.5 / rate);
  TimeGrid grid = TimeGrid::covering(horizon, dt);
  if (grid.n_steps > kMaxDefaultSteps) grid.n_steps = kMaxDefaultSteps;
  return grid;
}

double positive_increments(const std::vector<double>& values) {
  double sum = 0.0;
  for (std::size_t k = 1; k < values.size(); ++k)
    sum += std::max(0.0, values[k] - values[k - 1]);
  return sum;
}

double significant_increments(const std::vector<double>& values,
                              const std::vector<double>& sigma,
                              double n_sigma) {
  if (values.empty()) return 0.0;
  if (sigma.size() != values.size())
    throw InvalidArgument("one standard error per sample required");
  double sum = 0.0;
  std::size_t valley = 0, peak = 0;
  bool rising = false;
  // Rounding never counts as a revival, even where sigma vanishes. A curve
  // built from n chained steps carries O(n eps) relative error.
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double floor = 16.0 * static_cast<double>(values.size()) *
                       std::numeric_limits<double>::epsilon() * scale;
  auto separated = [&](std::size_t lo, std::size_t hi) {
    const double step = std::abs(values[hi] - values[lo]);
    return step > floor &&
           step >= n_sigma * std::hypot(sigma[lo], sigma[hi]);
  };
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (rising) {
      if (values[k] > values[peak]) {
        peak = k;
      } else if (values[k] < values[peak] && separated(k, peak)) {
        sum += values[peak] - values[valley];
        rising = false;
        valley = k;
      }
    } else {
      if (values[k] < values[valley]) {
        valley = k;
      } else if (values[k] > values[valley] && separated(valley, k)) {
        rising = true;
        peak = k;
      }
    }
  }
  if (rising) sum += values[peak] - values[valley];
  return sum;
}

double significant_increments(const std::vector<double>& values,
                              double threshold) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  double valley = values[0];
  double peak = values[0];
  bool rising = false;
  for (double v : values) {
    if (rising) {
      if (v > peak) {
        peak = v;
      } else if (peak - v >= threshold) {
        sum += peak - valley;
        rising = false;
        valley = v;
      }
    } else {
      if (v < valley) {
        valley = v;
      } else if (v - valley >= threshold) {
        rising = true;
        peak = v;
      }
    }
  }
  if (rising) sum += peak - valley;
  return sum;
}

NonMarkovResult blp_measure(const ModelParams& p, const BLPSearchConfig& cfg) {
  require_positive_gamma(p);
  if (cfg.azimuth_samples < 4 || cfg.polar_samples < 2)
    throw InvalidArgument("BLP scan needs at least 4 azimuths, 2 polars");
  const double horizon =
      cfg.horizon > 0.0 ? cfg.horizon : default_horizon(p, cfg.tail_eps);
  const TimeGrid grid = cfg.grid ? *cfg.grid : default_grid(p, horizon);
  validate(grid);
  const GramSeries gs(p, grid);

  // Equatorial scan; strict comparison keeps the smallest phi on ties.
  const double dphi = kPi / cfg.azimuth_samples;
  double best_phi = 0.0;
  double best = -1.0;
  for (int j = 0; j < cfg.azimuth_samples; ++j) {
    const double v = gs.increments(kPi / 2.0, j * dphi);
    if (v > best) {
      best = v;
      best_phi = j * dphi;
    }
  }
  auto on_equator = [&](double phi) { return gs.increments(kPi / 2.0, phi); };
  const auto [phi_eq, v_eq] = golden_max(on_equator, best_phi - dphi,
                                         best_phi + dphi, cfg.refinement_tol);
  double theta = kPi / 2.0, phi = phi_eq, value = best;
  if (v_eq > value) value = v_eq;
  else phi = best_phi;

  // Coarse off-equator check, then unconstrained local refinement.
  const double dtheta = (kPi / 2.0) / cfg.polar_samples;
  for (int i = 0; i < cfg.polar_samples; ++i) {
    for (int j = 0; j < cfg.azimuth_samples; j += 5) {
      const double v = gs.increments(i * dtheta, j * dphi);
      if (v > value) {
        value = v;
        theta = i * dtheta;
        phi = j * dphi;
      }
    }
  }
  compass_refine(gs, theta, phi, value, dphi, cfg.refinement_tol);
  canonicalize(theta, phi);

  NonMarkovResult out;
  out.value = value;
  out.theta = theta;
  out.phi = phi;
  const Vec3 n = direction(theta, phi);
  out.optimal_pair = {BlochVector{n}, BlochVector{-n}};
  out.curve.times.resize(gs.m.size());
  out.curve.values.resize(gs.m.size());
  for (std::size_t k = 0; k < gs.m.size(); ++k) {
    out.curve.times[k] = grid.time(static_cast<std::int64_t>(k));
    out.curve.values[k] = gs.distance(k, n);
  }
  out.value = std::max(value, refined_increments(
      out.curve.values, grid,
      [&](double t) { return (rtn::transfer_single(p, t) * n).norm(); }));
  out.tail = gs.tail;
  out.converged = gs.tail <= cfg.tail_eps;
  return out;
}

GeneralizedBlochVector apply_channel_one_side(const Mat3& t,
                                              const GeneralizedBlochVector& v) {
  GeneralizedBlochVector out;
  out.a = t * v.a;
  out.b = v.b;
  out.c = t * v.c;
  return out;
}

NonMarkovResult rhp_measure(const ModelParams& p,
                            const std::optional<TimeGrid>& grid_opt) {
  require_positive_gamma(p);
  const TimeGrid grid =
      grid_opt ? *grid_opt : default_grid(p, default_horizon(p));
  validate(grid);
  const GeneralizedBlochVector bell =
      generalized_bloch_from_density(bell_psi_plus());

  NonMarkovResult out;
  out.curve.times.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  out.curve.values.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  rtn::for_each_transfer_single(p, grid, [&](std::int64_t k, const Mat3& t) {
    out.curve.times.push_back(grid.time(k));
    out.curve.values.push_back(negativity(
        density_from_generalized_bloch(apply_channel_one_side(t, bell))));
  });
  out.value = refined_increments(out.curve.values, grid, [&](double t) {
    return negativity(density_from_generalized_bloch(
        apply_channel_one_side(rtn::transfer_single(p, t), bell)));
  });
  for (std::size_t k = 1; k < out.curve.values.size(); ++k)
    out.literal_abs_integral +=
        std::abs(out.curve.values[k] - out.curve.values[k - 1]);
  out.tail = out.curve.values.back();
  out.converged = out.tail <= kDefaultTailEps;
  return out;
}

ProbeResult trace_distance_probe_ou(
    const ModelParams& p, const std::pair<QubitState, QubitState>& pair,
    const TimeGrid& grid, const EnsembleConfig& ensemble,
    const mc::McOptions& options) {
  require_physical(pair.first, "first probe state");
  require_physical(pair.second, "second probe state");
  // Both states see the same trajectories, so D(t) = |<R(t)> dn| / 2 with
  // dn the difference of the initial Bloch vectors.
  const Vec3 dn =
      bloch_from_density(pair.first).n - bloch_from_density(pair.second).n;
  const auto ens = mc::evolve_bloch_mc(p, NoiseKind::kOu, dn, grid, ensemble,
                                       options);
  ProbeResult out;
  out.curve.times = ens.times;
  std::vector<double> sigma(ens.mean.size(), 0.0);
  for (std::size_t k = 0; k < ens.mean.size(); ++k) {
    const double norm = ens.mean[k].norm();
    out.curve.values.push_back(0.5 * norm);
    // Linearized standard error of |m| / 2 along the mean direction; the
    // largest principal one where the mean vanishes.
    double var;
    if (norm > 0.0) {
      const Vec3 dir = ens.mean[k] / norm;
      var = dir.dot(ens.mean_covariance[k] * dir);
    } else {
      Eigen::SelfAdjointEigenSolver<Mat3> es(ens.mean_covariance[k],
                                             Eigen::EigenvaluesOnly);
      var = es.eigenvalues().maxCoeff();
    }
    sigma[k] = 0.5 * std::sqrt(std::max(0.0, var));
  }
  out.threshold = 3.0 * *std::max_element(sigma.begin(), sigma.end());
  out.raw_increments = positive_increments(out.curve.values);
  out.increments = significant_increments(out.curve.values, sigma, 3.0);
  out.inconclusive = out.increments <= 0.0;
  return out;
}

}  // namespace telegraph::nonmarkov
