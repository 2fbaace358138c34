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

#include "telegraph/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace telegraph {

namespace {

// Real-axis roots come out of Cardano with ~1e-16 imaginary noise; this
// keeps the ordering stable for conjugate pairs and real triples.
constexpr double kTieTol = 1e-12;

Complex polish(const MonicCubic& f, Complex x) {
  for (int step = 0; step < 2; ++step) {
    const Complex d = f.derivative(x);
    if (std::abs(d) == 0.0) break;
    const Complex next = x - f(x) / d;
    if (!(std::abs(f(next)) <= std::abs(f(x)))) break;
    x = next;
  }
  return x;
}

}  // namespace

double MonicCubic::relative_residual(Complex x) const {
  const double ax = std::abs(x);
  const double scale = ax * ax * ax + std::abs(c2) * ax * ax +
                       std::abs(c1) * ax + std::abs(c0);
  const double r = std::abs((*this)(x));
  return scale > 0.0 ? r / scale : r;
}

void sort_roots(std::array<Complex, 3>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x.real() - y.real()) > kTieTol * scale)
      return x.real() > y.real();
    return x.imag() < y.imag();
  });
}

std::array<Complex, 3> solve_cubic(const MonicCubic& f) {
  // x = y - c2/3 gives y^3 + p y + q = 0.
  const double shift = f.c2 / 3.0;
  const Complex p = f.c1 - f.c2 * shift;
  const Complex q = 2.0 * shift * shift * shift - shift * f.c1 + f.c0;
  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Take the larger of the two candidate cubes to avoid cancellation.
  Complex u3 = -q / 2.0 + disc;
  const Complex alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;

  std::array<Complex, 3> roots;
  if (std::abs(u3) == 0.0) {
    roots.fill(Complex(-shift, 0.0));
  } else {
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex rot(-0.5, std::sqrt(3.0) / 2.0);
    Complex uk = u;
    for (int k = 0; k < 3; ++k) {
      roots[k] = uk - p / (3.0 * uk) - shift;
      uk *= rot;
    }
  }

  // The shift loses the small roots when the magnitudes are very unequal.
  // The largest root is reliable, so recover the others by deflation with
  // the product of the roots, -c0.
  const auto big = std::max_element(
      roots.begin(), roots.end(),
      [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  Complex r1 = polish(f, *big);
  if (std::abs(r1) > 0.0) {
    if (std::abs(r1.imag()) > kTieTol * std::abs(r1)) {
      const double norm2 = std::norm(r1);
      roots = {r1, std::conj(r1), Complex(-f.c0 / norm2, 0.0)};
    } else {
      r1 = Complex(r1.real(), 0.0);
      const Complex sum = -f.c2 - r1;
      const Complex prod = -f.c0 / r1;
      const Complex d = std::sqrt(sum * sum - 4.0 * prod);
      const Complex big_half =
          0.5 * (std::real(std::conj(sum) * d) >= 0.0 ? sum + d : sum - d);
      const Complex small_half =
          std::abs(big_half) > 0.0 ? prod / big_half : Complex(0.0);
      roots = {r1, big_half, small_half};
    }
  }

  for (auto& r : roots) {
    r = polish(f, r);
    // Conjugate-pair and real-root structure is exact for real coefficients.
    if (std::abs(r.imag()) <= kTieTol * std::max(1.0, std::abs(r)) &&
        std::abs(f(Complex(r.real(), 0.0))) <= std::abs(f(r)))
      r = Complex(r.real(), 0.0);
  }
  sort_roots(roots);
  return roots;
}

}  // namespace telegraph
