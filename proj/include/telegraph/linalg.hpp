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

// Small dense linear-algebra helpers: the matrix exponential and
// Kronecker products.

#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace telegraph {

namespace detail {

// Pade [m/m] numerator coefficients for m = 3, 5, 7, 9, 13 and the 1-norm
// bounds below which each degree reaches double precision (Higham 2005).
inline constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
inline constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0,
                                                 420.0,   30.0,    1.0};
inline constexpr std::array<double, 8> kPade7 = {
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
inline constexpr std::array<double, 10> kPade9 = {
    17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
    2162160.0,     110880.0,     3960.0,       90.0,        1.0};
inline constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
inline constexpr std::array<double, 4> kThetas = {
    1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
    2.097847961257068e0};
inline constexpr double kTheta13 = 5.371920351148152;

template <typename Matrix, std::size_t N>
Matrix pade_low(const Matrix& a, const std::array<double, N>& b) {
  // N = m + 1 coefficients, m odd.
  const Matrix ident = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix u = Matrix::Zero(a.rows(), a.cols());
  Matrix v = Matrix::Zero(a.rows(), a.cols());
  for (std::size_t k = 0; k < N; k += 2) {
    v += b[k] * power;
    u += b[k + 1] * power;
    power = power * a2;
  }
  u = a * u;
  return (v - u).partialPivLu().solve(v + u);
}

template <typename Matrix>
Matrix pade13(const Matrix& a) {
  const auto& b = kPade13;
  const Matrix ident = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  Matrix u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
             b[5] * a4 + b[3] * a2 + b[1] * ident;
  u = a * u;
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                   b[4] * a4 + b[2] * a2 + b[0] * ident;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace detail

/// exp(A) by scaling and squaring with a diagonal Pade approximant of degree
/// chosen from the 1-norm of A. Works for real and complex square matrices.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& input) {
  using Matrix = typename Derived::PlainObject;
  const Matrix a = input;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  if (norm <= detail::kThetas[0]) return detail::pade_low(a, detail::kPade3);
  if (norm <= detail::kThetas[1]) return detail::pade_low(a, detail::kPade5);
  if (norm <= detail::kThetas[2]) return detail::pade_low(a, detail::kPade7);
  if (norm <= detail::kThetas[3]) return detail::pade_low(a, detail::kPade9);
  int squarings = 0;
  if (norm > detail::kTheta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm / detail::kTheta13)));
  const double scale = std::ldexp(1.0, -squarings);
  Matrix r = detail::pade13(Matrix(a * scale));
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

}  // namespace telegraph
