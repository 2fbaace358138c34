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

#include <array>

#include "telegraph/types.hpp"

namespace telegraph {

/// Monic real cubic x^3 + c2 x^2 + c1 x + c0.
struct MonicCubic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  Complex operator()(Complex x) const { return ((x + c2) * x + c1) * x + c0; }
  Complex derivative(Complex x) const {
    return (3.0 * x + 2.0 * c2) * x + c1;
  }
  /// |f(x)| divided by the sum of the magnitudes of its terms.
  double relative_residual(Complex x) const;
};

/// All three roots via Cardano's formula in complex arithmetic followed by
/// two Newton steps. Sorted by descending real part, ties broken by
/// ascending imaginary part.
std::array<Complex, 3> solve_cubic(const MonicCubic& f);

/// Sort in place with the ordering used by solve_cubic.
void sort_roots(std::array<Complex, 3>& roots);

}  // namespace telegraph
