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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "telegraph/analytic.hpp"
#include "telegraph/nonmarkov.hpp"

using namespace telegraph;
using nonmarkov::blp_measure;
using nonmarkov::rhp_measure;

namespace {

// Sum of positive increments of |T(t) n| along a precomputed series.
double revivals_along(const std::vector<Mat3>& series, const Vec3& n) {
  std::vector<double> d;
  d.reserve(series.size());
  for (const Mat3& t : series) d.push_back((t * n).norm());
  return nonmarkov::positive_increments(d);
}

Vec3 polar(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

}  // namespace

TEST_CASE("positive and significant increments") {
  using nonmarkov::positive_increments;
  using nonmarkov::significant_increments;
  CHECK(positive_increments({}) == 0.0);
  CHECK(positive_increments({3.0, 2.0, 1.0}) == 0.0);
  CHECK(positive_increments({0.0, 1.0, 0.5, 2.0}) == doctest::Approx(2.5));
  const std::vector<double> wiggle{1.0, 1.01, 1.0, 1.01, 1.0, 0.5, 0.9, 0.2};
  CHECK(significant_increments(wiggle, 0.1) == doctest::Approx(0.4));
  CHECK(significant_increments(wiggle, 0.0) == doctest::Approx(0.42));
  CHECK(significant_increments(wiggle, 1.0) == 0.0);
  const std::vector<double> sigma(wiggle.size(), 0.01);
  CHECK(significant_increments(wiggle, sigma, 3.0) == doctest::Approx(0.4));
  CHECK_THROWS_AS(significant_increments(wiggle, std::vector<double>(2), 3.0),
                  InvalidArgument);
}

TEST_CASE("channel on one side of a two-qubit state") {
  const auto psi = generalized_bloch_from_density(bell_psi_plus());
  const auto same = nonmarkov::apply_channel_one_side(Mat3::Identity(), psi);
  CHECK((same.to_vector() - psi.to_vector()).norm() < 1e-15);
  const auto gone = nonmarkov::apply_channel_one_side(Mat3::Zero(), psi);
  const Mat4c quarter = Mat4c::Identity() / 4.0;
  CHECK((density_from_generalized_bloch(gone).matrix() - quarter).norm() <
        1e-15);

  // Ensemble with noise on the first qubit only.
  const ModelParams p{1.0, 0.5};
  const TimeGrid grid{0.02, 100};
  const auto r = mc::evolve_two_mc(p, NoiseKind::kRtn,
                                   mc::Topology::kFirstQubitOnly,
                                   bell_psi_plus(), grid, {20000, 5});
  const auto exact = rtn::transfer_single_series(p, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < exact.size(); k += 10) {
    const auto want = density_from_generalized_bloch(
        nonmarkov::apply_channel_one_side(exact[k], psi));
    worst = std::max(worst,
                     (r.states[k].matrix() - want.matrix()).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= std::max(4.0 * r.stderr_max, 5e-3));
}

TEST_CASE("blp optimum dominates random pairs") {
  for (auto [w, g] : {std::pair{1.0, 0.1}, {1.0, 1.0}, {0.3, 0.05}}) {
    const ModelParams p{w, g};
    const auto res = blp_measure(p);
    CHECK(res.converged);
    CHECK(res.value > 0.0);
    if (w == 1.0) CHECK(std::abs(std::cos(res.theta)) < 1e-3);
    CHECK(res.phi >= 0.0);
    CHECK(res.phi < std::numbers::pi);
    CHECK((res.optimal_pair[0].n + res.optimal_pair[1].n).norm() < 1e-15);
    CHECK(res.optimal_pair[0].n.norm() == doctest::Approx(1.0));

    const TimeGrid grid = nonmarkov::default_grid(p, nonmarkov::default_horizon(p));
    const auto series = rtn::transfer_single_series(p, grid);
    // Refining the sampled extrema can only add revivals, and only a little.
    const double sampled = revivals_along(series, res.optimal_pair[0].n);
    CHECK(sampled <= res.value);
    CHECK(sampled >= 0.95 * res.value);
    // Pair exchange leaves D(t) unchanged.
    CHECK(revivals_along(series, res.optimal_pair[1].n) == sampled);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
      const Vec3 n = polar(std::acos(2.0 * u(rng) - 1.0),
                           2.0 * std::numbers::pi * u(rng));
      CHECK(revivals_along(series, n) <= res.value);
    }
  }
}

TEST_CASE("blp decays as one over gamma for slow noise") {
  const double a = blp_measure({1.0, 0.01}).value;
  const double b = blp_measure({1.0, 0.1}).value;
  const double slope = std::log10(b / a);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));
  // Fast noise: the channel is close to Markovian.
  CHECK(blp_measure({1.0, 10.0}).value < 1e-3);
}

TEST_CASE("blp is stable under grid refinement") {
  const ModelParams p{1.0, 0.1};
  const double h = nonmarkov::default_horizon(p);
  const TimeGrid coarse = nonmarkov::default_grid(p, h);
  nonmarkov::BLPSearchConfig cfg;
  cfg.grid = TimeGrid{coarse.dt / 2.0, coarse.n_steps * 2};
  const double base = blp_measure(p).value;
  const double fine = blp_measure(p, cfg).value;
  CHECK(std::abs(fine - base) / base < 0.01);
}

TEST_CASE("rhp witness") {
  const ModelParams slow{1.0, 0.1};
  const auto a = rhp_measure(slow);
  const auto b = rhp_measure(slow);
  CHECK(a.value == b.value);
  CHECK(a.curve.values == b.curve.values);
  CHECK(a.value > 0.0);
  CHECK(a.literal_abs_integral >= a.value);
  // Negativity of the evolved Bell state from the density matrix.
  const auto psi = generalized_bloch_from_density(bell_psi_plus());
  for (std::size_t k = 0; k < a.curve.times.size(); k += a.curve.times.size() / 7) {
    const Mat3 t = rtn::transfer_single(slow, a.curve.times[k]);
    const double want = negativity(density_from_generalized_bloch(
        nonmarkov::apply_channel_one_side(t, psi)));
    CHECK(a.curve.values[k] == doctest::Approx(want).epsilon(1e-8));
  }
  const auto fast = rhp_measure({1.0, 2.0});
  CHECK(fast.value == 0.0);
  for (std::size_t k = 1; k < fast.curve.values.size(); ++k)
    CHECK(fast.curve.values[k] <= fast.curve.values[k - 1]);
}

TEST_CASE("measures approach the static-field limit") {
  // At gamma = 1.5 both witnesses vary continuously as omega -> 0 and
  // coincide at omega = 0.
  const double blp0 = blp_measure({0.0, 1.5}).value;
  const double rhp0 = rhp_measure(ModelParams{0.0, 1.5}).value;
  CHECK(blp0 > 0.0);
  CHECK(rhp0 == doctest::Approx(blp0).epsilon(1e-6));
  const double blp1 = blp_measure({1e-3, 1.5}).value;
  const double rhp1 = rhp_measure(ModelParams{1e-3, 1.5}).value;
  CHECK(std::abs(blp1 - blp0) <= 1e-3 * blp0);
  CHECK(std::abs(rhp1 - rhp0) <= 1e-3 * rhp0);
  CHECK(blp_measure({0.0, 2.1}).value < 1e-9);
}

TEST_CASE("blp at zero field is invariant under rotations about x") {
  const ModelParams p{0.0, 0.5};
  const TimeGrid grid{0.01, 1500};
  const auto series = rtn::transfer_single_series(p, grid);
  const Vec3 n = Vec3(0.2, 0.9, -0.3).normalized();
  for (double a : {0.4, 1.3, 2.9}) {
    const Vec3 r(n(0), std::cos(a) * n(1) - std::sin(a) * n(2),
                 std::sin(a) * n(1) + std::cos(a) * n(2));
    CHECK(revivals_along(series, r) ==
          doctest::Approx(revivals_along(series, n)).epsilon(1e-10));
  }
}

TEST_CASE("ou trace distance probe") {
  const auto pair = std::pair{density_from_bloch(BlochVector(Vec3::UnitX())),
                              density_from_bloch(BlochVector(-Vec3::UnitX()))};
  const TimeGrid grid{0.05, 200};
  const auto probe =
      nonmarkov::trace_distance_probe_ou({1.0, 1.0}, pair, grid, {100000, 3});
  CHECK(probe.curve.values.front() == doctest::Approx(1.0));
  CHECK(probe.threshold > 0.0);
  CHECK(probe.threshold < 0.02);
  CHECK(!probe.inconclusive);
  CHECK(probe.increments > 0.0);
  CHECK(probe.increments <= probe.raw_increments);

  mc::McOptions quiet;
  quiet.noise_scale = 0.0;
  const auto still = nonmarkov::trace_distance_probe_ou({1.0, 1.0}, pair, grid,
                                                        {200, 3}, quiet);
  CHECK(still.inconclusive);
  for (double d : still.curve.values) CHECK(d == doctest::Approx(1.0));

  CHECK_THROWS_AS(nonmarkov::trace_distance_probe_ou(
                      {1.0, 1.0},
                      {density_from_bloch(BlochVector(Vec3(2.0, 0.0, 0.0))),
                       pair.second},
                      grid, {10, 3}),
                  InvalidArgument);
}
