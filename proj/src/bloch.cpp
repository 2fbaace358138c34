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

#include "telegraph/bloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace telegraph {

namespace {

const std::array<Mat2c, 3>& pauli_table() {
  static const std::array<Mat2c, 3> table = [] {
    const Complex i(0.0, 1.0);
    std::array<Mat2c, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return table;
}

Mat4c kron(const Mat2c& x, const Mat2c& y) {
  return Eigen::kroneckerProduct(x, y).eval();
}

}  // namespace

const Mat2c& pauli(int index) { return pauli_table().at(index); }

Vec15 GeneralizedBlochVector::to_vector() const {
  Vec15 v;
  v.head<3>() = a;
  v.segment<3>(3) = b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(6 + 3 * i + j) = c(i, j);
  return v;
}

GeneralizedBlochVector GeneralizedBlochVector::from_vector(const Vec15& v) {
  GeneralizedBlochVector g;
  g.a = v.head<3>();
  g.b = v.segment<3>(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.c(i, j) = v(6 + 3 * i + j);
  return g;
}

std::string PhysicalityReport::violations(double tol) const {
  std::ostringstream out;
  const char* sep = "";
  if (hermiticity_error > tol) {
    out << sep << "not Hermitian (max |rho - rho^dagger| = "
        << hermiticity_error << ")";
    sep = "; ";
  }
  if (trace_error > tol) {
    out << sep << "trace differs from 1 by " << trace_error;
    sep = "; ";
  }
  if (min_eigenvalue < -tol) {
    out << sep << "not positive semidefinite (min eigenvalue "
        << min_eigenvalue << ")";
  }
  return out.str();
}

template <int D>
Eigen::Matrix<double, D, 1> eigenvalues(const DensityMatrix<D>& rho) {
  using Matrix = typename DensityMatrix<D>::Matrix;
  const Matrix herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

template <int D>
PhysicalityReport physicality(const DensityMatrix<D>& rho) {
  PhysicalityReport r;
  r.hermiticity_error =
      (rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff();
  r.trace_error = std::abs(rho.matrix().trace() - Complex(1.0, 0.0));
  r.min_eigenvalue = eigenvalues(rho).minCoeff();
  return r;
}

template <int D>
void require_physical(const DensityMatrix<D>& rho, const std::string& what,
                      double tol) {
  const PhysicalityReport r = physicality(rho);
  if (!r.ok(tol)) {
    throw InvalidArgument(what + " is not a physical state: " +
                          r.violations(tol));
  }
}

template Eigen::Matrix<double, 2, 1> eigenvalues(const DensityMatrix<2>&);
template Eigen::Matrix<double, 4, 1> eigenvalues(const DensityMatrix<4>&);
template PhysicalityReport physicality(const DensityMatrix<2>&);
template PhysicalityReport physicality(const DensityMatrix<4>&);
template void require_physical(const DensityMatrix<2>&, const std::string&,
                               double);
template void require_physical(const DensityMatrix<4>&, const std::string&,
                               double);

QubitState density_from_bloch(const BlochVector& n) {
  Mat2c m = Mat2c::Identity();
  for (int i = 0; i < 3; ++i) m += n.n(i) * pauli(i);
  return QubitState(0.5 * m);
}

BlochVector bloch_from_density(const QubitState& rho) {
  BlochVector n;
  for (int i = 0; i < 3; ++i)
    n.n(i) = (pauli(i) * rho.matrix()).trace().real();
  return n;
}

TwoQubitState density_from_generalized_bloch(const GeneralizedBlochVector& v) {
  const Mat2c id = Mat2c::Identity();
  Mat4c m = Mat4c::Identity();
  for (int i = 0; i < 3; ++i) {
    m += v.a(i) * kron(pauli(i), id) + v.b(i) * kron(id, pauli(i));
    for (int j = 0; j < 3; ++j) m += v.c(i, j) * kron(pauli(i), pauli(j));
  }
  return TwoQubitState(0.25 * m);
}

GeneralizedBlochVector generalized_bloch_from_density(
    const TwoQubitState& rho) {
  const Mat2c id = Mat2c::Identity();
  GeneralizedBlochVector v;
  for (int i = 0; i < 3; ++i) {
    v.a(i) = (kron(pauli(i), id) * rho.matrix()).trace().real();
    v.b(i) = (kron(id, pauli(i)) * rho.matrix()).trace().real();
    for (int j = 0; j < 3; ++j)
      v.c(i, j) = (kron(pauli(i), pauli(j)) * rho.matrix()).trace().real();
  }
  return v;
}

QubitState reduced_first(const TwoQubitState& rho) {
  Mat2c r = Mat2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += rho(2 * i + k, 2 * j + k);
  return QubitState(r);
}

QubitState reduced_second(const TwoQubitState& rho) {
  Mat2c r = Mat2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += rho(2 * k + i, 2 * k + j);
  return QubitState(r);
}

Mat4c partial_transpose(const TwoQubitState& rho) {
  Mat4c out;
  // rho_{(a b),(c d)} -> rho_{(a d),(c b)}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

CorrelationDiagonalization diagonalize_correlation(
    const Mat3& c, const std::optional<Vec3>& previous) {
  const double asym = (c - c.transpose()).norm();
  if (asym > kPhysTol) {
    std::ostringstream msg;
    msg << "correlation matrix is not symmetric (||C - C^T|| = " << asym
        << ")";
    throw InvalidArgument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat3> solver(0.5 * (c + c.transpose()));
  const Vec3 vals = solver.eigenvalues();
  const Mat3 vecs = solver.eigenvectors();

  std::array<int, 3> order{0, 1, 2};
  if (previous) {
    std::array<int, 3> perm{0, 1, 2};
    double best = std::numeric_limits<double>::infinity();
    do {
      double d = 0.0;
      for (int k = 0; k < 3; ++k) d += std::abs(vals(perm[k]) - (*previous)(k));
      if (d < best) {
        best = d;
        order = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return vals(x) > vals(y); });
  }

  CorrelationDiagonalization out;
  Mat3 basis;
  for (int k = 0; k < 3; ++k) {
    out.eigenvalues(k) = vals(order[k]);
    basis.col(k) = vecs.col(order[k]);
  }
  // Flipping one eigenvector keeps O^T C O diagonal and makes O proper.
  if (basis.determinant() < 0.0) basis.col(2) *= -1.0;
  out.left = basis.transpose();
  out.right = basis.transpose();
  return out;
}

TwoQubitState bell_psi_plus() {
  Eigen::Vector4cd psi(1.0, 0.0, 0.0, 1.0);
  psi /= std::sqrt(2.0);
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState bell_phi_minus() {
  Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState werner_state(double p) {
  return TwoQubitState(p * bell_phi_minus().matrix() +
                       (1.0 - p) * Mat4c::Identity() / 4.0);
}

TwoQubitState bell_diagonal_state(const Vec3& c) {
  GeneralizedBlochVector v;
  v.c = c.asDiagonal();
  return density_from_generalized_bloch(v);
}

}  // namespace telegraph
