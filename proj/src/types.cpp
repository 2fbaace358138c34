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

#include "telegraph/types.hpp"

#include <algorithm>
#include <cmath>

namespace telegraph {

std::string to_string(NoiseKind kind) {
  return kind == NoiseKind::kRtn ? "rtn" : "ou";
}

NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "rtn") return NoiseKind::kRtn;
  if (s == "ou") return NoiseKind::kOu;
  throw InvalidArgument("unknown noise kind '" + s + "' (expected rtn or ou)");
}

TimeGrid TimeGrid::covering(double horizon, double max_dt) {
  if (!(horizon > 0.0) || !(max_dt > 0.0))
    throw InvalidArgument("time grid needs a positive horizon and step");
  const auto n = static_cast<std::int64_t>(
      std::ceil(horizon / max_dt - 1e-9));
  TimeGrid g;
  g.n_steps = std::max<std::int64_t>(n, 1);
  g.dt = horizon / static_cast<double>(g.n_steps);
  return g;
}

TimeGrid TimeGrid::default_for(const ModelParams& p, double horizon) {
  const double dt = 0.05 / std::max({1.0, p.omega, p.gamma});
  TimeGrid g = covering(horizon, dt);
  if (g.n_steps < 200) g = covering(horizon, horizon / 200.0);
  return g;
}

void validate(const TimeGrid& grid) {
  if (!(grid.dt > 0.0) || !std::isfinite(grid.dt))
    throw InvalidArgument("time step must be positive and finite");
  if (grid.n_steps < 1)
    throw InvalidArgument("time grid needs at least one step");
}

}  // namespace telegraph
