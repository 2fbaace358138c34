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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "telegraph/analytic.hpp"
#include "telegraph/correlations.hpp"
#include "telegraph/mc.hpp"
#include "telegraph/noise.hpp"
#include "telegraph/nonmarkov.hpp"
#ifdef TELEGRAPH_HAVE_RUNNER
#include "runner.hpp"
#endif

namespace py = pybind11;
using namespace telegraph;

namespace {

QubitState qubit(const Mat2c& m) {
  QubitState rho(m);
  require_physical(rho, "rho");
  return rho;
}

TwoQubitState two_qubit(const Mat4c& m) {
  TwoQubitState rho(m);
  require_physical(rho, "rho");
  return rho;
}

py::dict measure_dict(const nonmarkov::NonMarkovResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["theta"] = r.theta;
  d["phi"] = r.phi;
  d["times"] = r.curve.times;
  d["curve"] = r.curve.values;
  d["tail"] = r.tail;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_telegraph, m) {
  m.doc() = "Qubit dynamics under random telegraph and OU noise";
  m.attr("__version__") = TELEGRAPH_VERSION;
  py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                          PyExc_ValueError);

  py::enum_<NoiseKind>(m, "NoiseKind")
      .value("RTN", NoiseKind::kRtn)
      .value("OU", NoiseKind::kOu);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double omega, double gamma) {
             return ModelParams{omega, gamma};
           }),
           py::arg("omega") = 1.0, py::arg("gamma") = 1.0)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("gamma", &ModelParams::gamma);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init([](double dt, std::int64_t n_steps) {
             TimeGrid g{dt, n_steps};
             validate(g);
             return g;
           }),
           py::arg("dt") = 0.05, py::arg("n_steps") = 200)
      .def_readonly("dt", &TimeGrid::dt)
      .def_readonly("n_steps", &TimeGrid::n_steps)
      .def("horizon", &TimeGrid::horizon);

  // Analytic RTN maps.
  m.def("transfer_single", &rtn::transfer_single, py::arg("p"), py::arg("t"));
  m.def("transfer_single_series", &rtn::transfer_single_series, py::arg("p"),
        py::arg("grid"));
  m.def("transfer_two_ce", &rtn::transfer_two_ce, py::arg("p"), py::arg("t"));
  m.def("transfer_two_ie", &rtn::transfer_two_ie, py::arg("p"), py::arg("t"));
  m.def("eigen_cubics", [](const ModelParams& p) {
    const auto e = rtn::eigen_cubics(p);
    return py::make_tuple(std::vector<Complex>(e.mu.begin(), e.mu.end()),
                          std::vector<Complex>(e.eta.begin(), e.eta.end()));
  });
  m.def("real_region_boundaries", &rtn::real_region_boundaries,
        py::arg("omega"));

  // Noise and Monte Carlo.
  m.def("derive_seed", &derive_seed, py::arg("master_seed"), py::arg("index"),
        py::arg("stream") = 0);
  m.def(
      "sample_noise",
      [](NoiseKind kind, const ModelParams& p, const TimeGrid& grid,
         std::uint64_t seed) { return sample_noise(kind, p, grid, seed).values; },
      py::arg("kind"), py::arg("p"), py::arg("grid"), py::arg("seed"));
  m.def(
      "evolve_bloch_mc",
      [](const ModelParams& p, NoiseKind kind, const Vec3& n0,
         const TimeGrid& grid, std::int64_t n, std::uint64_t seed, int threads) {
        mc::McOptions opt;
        opt.threads = threads;
        const auto r = mc::evolve_bloch_mc(p, kind, n0, grid, {n, seed}, opt);
        Eigen::MatrixXd mean(r.mean.size(), 3), se(r.mean.size(), 3);
        for (std::size_t k = 0; k < r.mean.size(); ++k) {
          mean.row(k) = r.mean[k].transpose();
          se.row(k) = r.mean_covariance[k].diagonal().cwiseSqrt().transpose();
        }
        return py::make_tuple(r.times, mean, se);
      },
      py::arg("p"), py::arg("kind"), py::arg("n0"), py::arg("grid"),
      py::arg("n") = 100000, py::arg("seed") = kDefaultSeed,
      py::arg("threads") = 0,
      "Mean Bloch vectors and their standard errors: (times, mean, se).");

  // Correlations.
  m.def("negativity", [](const Mat4c& rho) { return negativity(two_qubit(rho)); });
  m.def("discord", [](const Mat4c& rho) { return discord(two_qubit(rho)); });
  m.def("mutual_information",
        [](const Mat4c& rho) { return mutual_information(two_qubit(rho)); });
  m.def("discord_bell_diagonal",
        [](const Vec3& c) { return discord_bell_diagonal({c}); });
  m.def("fidelity", [](const Mat2c& a, const Mat2c& b) {
    return fidelity(qubit(a), qubit(b));
  });
  m.def("bell_psi_plus", [] { return Mat4c(bell_psi_plus().matrix()); });
  m.def("werner_state", [](double p) { return Mat4c(werner_state(p).matrix()); });

  // Non-Markovianity.
  m.def("blp_measure", [](const ModelParams& p) {
    const auto r = nonmarkov::blp_measure(p);
    py::dict d = measure_dict(r);
    d["pair"] = py::make_tuple(r.optimal_pair[0].n, r.optimal_pair[1].n);
    return d;
  });
  m.def("rhp_measure", [](const ModelParams& p) {
    return measure_dict(nonmarkov::rhp_measure(p));
  });

#ifdef TELEGRAPH_HAVE_RUNNER
  py::register_exception<runner::ConfigError>(m, "ConfigError",
                                              PyExc_ValueError);
  m.def(
      "run",
      [](const std::string& config_text) {
        runner::ExperimentConfig cfg;
        runner::apply_config_text(cfg, config_text);
        const auto r = runner::run(cfg);
        std::ostringstream out;
        runner::write_csv(out, r.table);
        return py::make_tuple(out.str(), r.converged);
      },
      py::arg("config"),
      "Runs a key=value configuration; returns (csv text, converged).");
#endif
}
