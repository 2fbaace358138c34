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

// Bloch-coordinate and density-matrix algebra for one and two qubits.
//
// Basis convention: sigma_z-diagonal computational basis with |0> the +1
// eigenvector of sigma_z. Two-qubit kets are ordered |00>, |01>, |10>, |11>
// with the first factor being qubit A.

#pragma once

#include <optional>
#include <string>

#include "telegraph/types.hpp"

namespace telegraph {

/// Pauli matrix sigma_{index+1}: 0 -> x, 1 -> y, 2 -> z.
const Mat2c& pauli(int index);

/// Single-qubit Bloch vector n, with rho = (I + n . sigma) / 2.
struct BlochVector {
  Vec3 n = Vec3::Zero();

  BlochVector() = default;
  explicit BlochVector(const Vec3& v) : n(v) {}
  BlochVector(double x, double y, double z) : n(x, y, z) {}

  double norm() const { return n.norm(); }
};

/// Two-qubit generalized Bloch vector: marginal vectors a, b and the
/// correlation block C, so that
///   rho = (I + sum_i a_i s_i x I + b_i I x s_i + sum_ij C_ij s_i x s_j) / 4.
struct GeneralizedBlochVector {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 c = Mat3::Zero();

  /// Flat 15-vector (a, b, c11, c12, c13, c21, ..., c33).
  Vec15 to_vector() const;
  static GeneralizedBlochVector from_vector(const Vec15& v);
};

template <int D>
class DensityMatrix {
 public:
  using Matrix = Eigen::Matrix<Complex, D, D>;
  static constexpr int kDim = D;

  /// Maximally mixed state.
  DensityMatrix() : m_(Matrix::Identity() / static_cast<double>(D)) {}
  explicit DensityMatrix(const Matrix& m) : m_(m) {}

  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

using QubitState = DensityMatrix<2>;
using TwoQubitState = DensityMatrix<4>;

struct PhysicalityReport {
  double hermiticity_error = 0.0;  // max |rho - rho^dagger|
  double trace_error = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;

  bool ok(double tol = kPhysTol) const {
    return hermiticity_error <= tol && trace_error <= tol &&
           min_eigenvalue >= -tol;
  }
  /// Human-readable list of the violated constraints (empty if ok).
  std::string violations(double tol = kPhysTol) const;
};

template <int D>
PhysicalityReport physicality(const DensityMatrix<D>& rho);

/// Throws InvalidArgument naming the violated constraint.
template <int D>
void require_physical(const DensityMatrix<D>& rho, const std::string& what,
                      double tol = kPhysTol);

/// Eigenvalues of the Hermitian part, ascending.
template <int D>
Eigen::Matrix<double, D, 1> eigenvalues(const DensityMatrix<D>& rho);

QubitState density_from_bloch(const BlochVector& n);
BlochVector bloch_from_density(const QubitState& rho);

TwoQubitState density_from_generalized_bloch(const GeneralizedBlochVector& v);
GeneralizedBlochVector generalized_bloch_from_density(const TwoQubitState& rho);

QubitState reduced_first(const TwoQubitState& rho);
QubitState reduced_second(const TwoQubitState& rho);

/// Partial transpose on the second factor.
Mat4c partial_transpose(const TwoQubitState& rho);

struct CorrelationDiagonalization {
  /// Tetrahedron coordinates (c1, c2, c3).
  Vec3 eigenvalues = Vec3::Zero();
  /// Local rotations with left * C * right^T = diag(eigenvalues); both are
  /// proper rotations (det = +1).
  Mat3 left = Mat3::Identity();
  Mat3 right = Mat3::Identity();
};

/// Diagonalizes a symmetric correlation block. Eigenvalues are sorted in
/// descending order, or, when `previous` is given, permuted to be closest
/// to it (for tracing continuous trajectories). Throws InvalidArgument if
/// ||C - C^T|| exceeds kPhysTol.
CorrelationDiagonalization diagonalize_correlation(
    const Mat3& c, const std::optional<Vec3>& previous = std::nullopt);

// Named states.

/// (|00> + |11>) / sqrt(2).
TwoQubitState bell_psi_plus();
/// (|01> - |10>) / sqrt(2), the singlet.
TwoQubitState bell_phi_minus();
/// p |singlet><singlet| + (1 - p) I / 4.
TwoQubitState werner_state(double p);
/// Bell-diagonal state (I + sum_j c_j s_j x s_j) / 4.
TwoQubitState bell_diagonal_state(const Vec3& c);

}  // namespace telegraph
