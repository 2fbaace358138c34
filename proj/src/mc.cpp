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

#include "telegraph/mc.hpp"

#include <algorithm>
#include <cmath>

#include "telegraph/parallel.hpp"

namespace telegraph::mc {

namespace {

constexpr std::int64_t kBlockSize = 256;

// Per-entry mean and sum of squared deviations of the real and imaginary
// parts of every element at every time (Welford within a block, Chan et al.
// when merging blocks).
struct Moments {
  double count = 0.0;
  std::vector<double> mean;
  std::vector<double> m2;

  explicit Moments(std::size_t n = 0) : mean(n, 0.0), m2(n, 0.0) {}

  void merge(const Moments& other) {
    const double total = count + other.count;
    if (other.count == 0.0) return;
    const double w = other.count / total;
    const double cross = count * other.count / total;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double delta = other.mean[i] - mean[i];
      mean[i] += delta * w;
      m2[i] += other.m2[i] + delta * delta * cross;
    }
    count = total;
  }
};

// Mean and co-moment matrix (upper triangle xx, yy, zz, xy, xz, yz) of a
// 3-vector at every time.
struct VectorMoments {
  double count = 0.0;
  std::vector<double> mean;
  std::vector<double> co;

  explicit VectorMoments(std::size_t steps = 0)
      : mean(3 * steps, 0.0), co(6 * steps, 0.0) {}

  void add(std::size_t k, const Vec3& x) {
    const double inv = 1.0 / count;
    double* m = &mean[3 * k];
    double* c = &co[6 * k];
    const Vec3 before(x(0) - m[0], x(1) - m[1], x(2) - m[2]);
    for (int i = 0; i < 3; ++i) m[i] += before(i) * inv;
    const Vec3 after(x(0) - m[0], x(1) - m[1], x(2) - m[2]);
    c[0] += before(0) * after(0);
    c[1] += before(1) * after(1);
    c[2] += before(2) * after(2);
    c[3] += before(0) * after(1);
    c[4] += before(0) * after(2);
    c[5] += before(1) * after(2);
  }

  void merge(const VectorMoments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double w = other.count / total;
    const double cross = count * other.count / total;
    for (std::size_t k = 0; k < mean.size() / 3; ++k) {
      double* m = &mean[3 * k];
      double* c = &co[6 * k];
      const double* om = &other.mean[3 * k];
      const double* oc = &other.co[6 * k];
      const double d[3] = {om[0] - m[0], om[1] - m[1], om[2] - m[2]};
      const int pairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};
      for (int q = 0; q < 6; ++q)
        c[q] += oc[q] + d[pairs[q][0]] * d[pairs[q][1]] * cross;
      for (int i = 0; i < 3; ++i) m[i] += d[i] * w;
    }
    count = total;
  }
};

template <int D>
void accumulate(Moments& m, std::size_t k,
                const Eigen::Matrix<Complex, D, D>& rho) {
  // count is bumped by the caller once per trajectory, before time 0.
  const double inv = 1.0 / m.count;
  std::size_t idx = k * D * D * 2;
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < D; ++j) {
      for (double x : {rho(i, j).real(), rho(i, j).imag()}) {
        const double delta = x - m.mean[idx];
        m.mean[idx] += delta * inv;
        m.m2[idx] += delta * (x - m.mean[idx]);
        ++idx;
      }
    }
  }
}

template <int D>
EvolutionResult<D> finalize(const Moments& m, const TimeGrid& grid,
                            std::int64_t n) {
  EvolutionResult<D> out;
  const auto steps = static_cast<std::size_t>(grid.n_steps) + 1;
  out.times.resize(steps);
  out.states.reserve(steps);
  out.stderr_per_time.resize(steps);
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k < steps; ++k) {
    out.times[k] = grid.time(static_cast<std::int64_t>(k));
    Eigen::Matrix<Complex, D, D> rho;
    double worst = 0.0;
    std::size_t idx = k * D * D * 2;
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j) {
        double mean[2];
        double var = 0.0;
        for (int c = 0; c < 2; ++c, ++idx) {
          mean[c] = m.mean[idx];
          if (n > 1) var += m.m2[idx] / (nn - 1.0);
        }
        rho(i, j) = Complex(mean[0], mean[1]);
        worst = std::max(worst, std::sqrt(var / nn));
      }
    }
    out.states.emplace_back(rho);
    out.stderr_per_time[k] = worst;
    out.stderr_max = std::max(out.stderr_max, worst);
  }
  return out;
}

void check_inputs(const ModelParams& p, NoiseKind kind, const TimeGrid& grid,
                  const EnsembleConfig& ensemble, const McOptions& options) {
  validate(grid);
  if (!std::isfinite(p.omega))
    throw InvalidArgument("omega must be finite");
  if (kind == NoiseKind::kRtn ? !(p.gamma >= 0.0) : !(p.gamma > 0.0))
    throw InvalidArgument("gamma out of range for " + to_string(kind));
  if (ensemble.n_realizations < 1)
    throw InvalidArgument("n_realizations must be at least 1");
  if (!std::isfinite(options.noise_scale))
    throw InvalidArgument("noise_scale must be finite");
  if (options.threads < 0) throw InvalidArgument("threads must be >= 0");
}

// Noise grid sampled by the trajectory generator and the stride/offset
// that picks the value used on step k.
struct NoisePlan {
  TimeGrid grid;
  std::size_t stride = 1;
  std::size_t offset = 0;
};

NoisePlan plan_for(const TimeGrid& grid, SamplingRule rule) {
  if (rule == SamplingRule::kLeft) return {grid, 1, 0};
  return {TimeGrid{grid.dt / 2.0, grid.n_steps * 2}, 2, 1};
}

void fill_noise(NoiseKind kind, double gamma, const TimeGrid& grid,
                Engine& rng, std::vector<double>& out) {
  if (kind == NoiseKind::kRtn)
    fill_rtn(gamma, grid, rng, out);
  else
    fill_ou(gamma, grid, rng, out);
}

template <typename Acc = Moments, typename PerTrajectory>
Acc run_ensemble(std::size_t n_values, const EnsembleConfig& ensemble,
                 const McOptions& options, PerTrajectory&& trajectory) {
  const std::int64_t n = ensemble.n_realizations;
  const std::int64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  const int threads = options.threads > 0 ? options.threads : thread_count();
  return ordered_pairwise_reduce<Acc>(
      n_blocks, threads,
      [&](std::int64_t block) {
        Acc m(n_values);
        const std::int64_t begin = block * kBlockSize;
        const std::int64_t end = std::min(n, begin + kBlockSize);
        for (std::int64_t i = begin; i < end; ++i) {
          m.count += 1.0;
          trajectory(i, m);
        }
        return m;
      },
      [](Acc& into, const Acc& from) { into.merge(from); });
}

}  // namespace

Mat2c step_unitary(double omega, double b, double dt) {
  const double r = std::hypot(omega, b);
  const double phase = r * dt;
  const double c = std::cos(phase);
  const double s = r > 0.0 ? std::sin(phase) / r : dt;
  Mat2c u;
  u << Complex(c, -s * omega), Complex(0.0, -s * b),
      Complex(0.0, -s * b), Complex(c, s * omega);
  return u;
}

EvolutionResult<2> evolve_single_mc(const ModelParams& p, NoiseKind kind,
                                    const QubitState& rho0,
                                    const TimeGrid& grid,
                                    const EnsembleConfig& ensemble,
                                    const McOptions& options) {
  check_inputs(p, kind, grid, ensemble, options);
  require_physical(rho0, "initial state");
  const NoisePlan plan = plan_for(grid, options.rule);
  const auto steps = static_cast<std::size_t>(grid.n_steps) + 1;

  Moments m = run_ensemble(
      steps * 8, ensemble, options, [&](std::int64_t i, Moments& acc) {
        thread_local std::vector<double> noise;
        Engine rng(derive_seed(ensemble.master_seed,
                               static_cast<std::uint64_t>(i)));
        fill_noise(kind, p.gamma, plan.grid, rng, noise);
        Mat2c rho = rho0.matrix();
        accumulate<2>(acc, 0, rho);
        for (std::size_t k = 0; k + 1 < steps; ++k) {
          const double b =
              options.noise_scale * noise[k * plan.stride + plan.offset];
          const Mat2c u = step_unitary(p.omega, b, grid.dt);
          rho = (u * rho * u.adjoint()).eval();
          accumulate<2>(acc, k + 1, rho);
        }
      });
  return finalize<2>(m, grid, ensemble.n_realizations);
}

EvolutionResult<4> evolve_two_mc(const ModelParams& p, NoiseKind kind,
                                 Topology topology, const TwoQubitState& rho0,
                                 const TimeGrid& grid,
                                 const EnsembleConfig& ensemble,
                                 const McOptions& options) {
  check_inputs(p, kind, grid, ensemble, options);
  require_physical(rho0, "initial state");
  const NoisePlan plan = plan_for(grid, options.rule);
  const auto steps = static_cast<std::size_t>(grid.n_steps) + 1;

  Moments m = run_ensemble(
      steps * 32, ensemble, options, [&](std::int64_t i, Moments& acc) {
        thread_local std::vector<double> noise_a;
        thread_local std::vector<double> noise_b;
        const auto index = static_cast<std::uint64_t>(i);
        Engine rng_a(derive_seed(ensemble.master_seed, index, 0));
        fill_noise(kind, p.gamma, plan.grid, rng_a, noise_a);
        if (topology == Topology::kIndependent) {
          Engine rng_b(derive_seed(ensemble.master_seed, index, 1));
          fill_noise(kind, p.gamma, plan.grid, rng_b, noise_b);
        }
        Mat4c rho = rho0.matrix();
        accumulate<4>(acc, 0, rho);
        for (std::size_t k = 0; k + 1 < steps; ++k) {
          const std::size_t at = k * plan.stride + plan.offset;
          const double ba = options.noise_scale * noise_a[at];
          const Mat2c ua = step_unitary(p.omega, ba, grid.dt);
          Mat2c ub;
          switch (topology) {
            case Topology::kCommon:
              ub = ua;
              break;
            case Topology::kIndependent:
              ub = step_unitary(p.omega, options.noise_scale * noise_b[at],
                                grid.dt);
              break;
            case Topology::kFirstQubitOnly:
              ub = Mat2c::Identity();
              break;
          }
          Mat4c u;
          for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) u.block<2, 2>(2 * r, 2 * c) = ua(r, c) * ub;
          rho = (u * rho * u.adjoint()).eval();
          accumulate<4>(acc, k + 1, rho);
        }
      });
  return finalize<4>(m, grid, ensemble.n_realizations);
}

BlochEnsemble evolve_bloch_mc(const ModelParams& p, NoiseKind kind,
                              const Vec3& v0, const TimeGrid& grid,
                              const EnsembleConfig& ensemble,
                              const McOptions& options) {
  check_inputs(p, kind, grid, ensemble, options);
  if (!v0.allFinite()) throw InvalidArgument("vector must be finite");
  const NoisePlan plan = plan_for(grid, options.rule);
  const auto steps = static_cast<std::size_t>(grid.n_steps) + 1;
  // v . sigma is propagated as an operator; rotations act linearly.
  Mat2c a0 = Mat2c::Zero();
  for (int i = 0; i < 3; ++i) a0 += v0(i) * pauli(i);
  auto components = [](const Mat2c& a) {
    return Vec3(a(0, 1).real(), -a(0, 1).imag(),
                0.5 * (a(0, 0) - a(1, 1)).real());
  };

  VectorMoments m = run_ensemble<VectorMoments>(
      steps, ensemble, options, [&](std::int64_t i, VectorMoments& acc) {
        thread_local std::vector<double> noise;
        Engine rng(derive_seed(ensemble.master_seed,
                               static_cast<std::uint64_t>(i)));
        fill_noise(kind, p.gamma, plan.grid, rng, noise);
        Mat2c a = a0;
        acc.add(0, components(a));
        for (std::size_t k = 0; k + 1 < steps; ++k) {
          const double b =
              options.noise_scale * noise[k * plan.stride + plan.offset];
          const Mat2c u = step_unitary(p.omega, b, grid.dt);
          a = (u * a * u.adjoint()).eval();
          acc.add(k + 1, components(a));
        }
      });

  BlochEnsemble out;
  const double n = static_cast<double>(ensemble.n_realizations);
  const double norm = n > 1.0 ? 1.0 / ((n - 1.0) * n) : 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    out.times.push_back(grid.time(static_cast<std::int64_t>(k)));
    out.mean.emplace_back(m.mean[3 * k], m.mean[3 * k + 1], m.mean[3 * k + 2]);
    const double* c = &m.co[6 * k];
    Mat3 cov;
    cov << c[0], c[3], c[4], c[3], c[1], c[5], c[4], c[5], c[2];
    out.mean_covariance.push_back(cov * norm);
  }
  return out;
}

std::string to_string(Topology topology) {
  switch (topology) {
    case Topology::kCommon:
      return "common";
    case Topology::kIndependent:
      return "independent";
    case Topology::kFirstQubitOnly:
      return "first-only";
  }
  return "unknown";
}

Topology topology_from_string(const std::string& s) {
  if (s == "common" || s == "CE") return Topology::kCommon;
  if (s == "independent" || s == "IE") return Topology::kIndependent;
  if (s == "first-only") return Topology::kFirstQubitOnly;
  throw InvalidArgument("unknown topology '" + s +
                        "' (expected common, independent or first-only)");
}

}  // namespace telegraph::mc
