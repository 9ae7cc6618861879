// Copyright 2026 The scf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scf/csd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scf {

namespace {

// Columns with sin(theta) below this are recovered from the U11 block
// instead of dividing by a tiny singular value.
constexpr double kSmallSine = 1e-7;

}  // namespace

CsdFactors csd(const Matrix& u) {
  const Eigen::Index dim = u.rows();
  if (dim % 2 != 0) throw std::invalid_argument("csd: dimension must be even");
  if (!is_unitary(u)) throw std::invalid_argument("csd: input must be unitary");
  const Eigen::Index n = dim / 2;

  const Matrix u00 = u.topLeftCorner(n, n);
  const Matrix u01 = u.topRightCorner(n, n);
  const Matrix u10 = u.bottomLeftCorner(n, n);
  const Matrix u11 = u.bottomRightCorner(n, n);

  // U00 = W1 C V1svd^dag with singular values descending, i.e. angles ascending.
  Eigen::JacobiSVD<Matrix> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix w1 = svd.matrixU();
  const Matrix v1svd = svd.matrixV();

  // Unitarity of the left block column gives X^dag X = I - C^2 exactly, so
  // normalized columns of X = U10 V1 are the W2 columns wherever sin > 0,
  // and the column norms are the sines. Taking the angle from atan2 instead
  // of acos keeps angles near 0 exact (acos is ill-conditioned at 1).
  const Matrix x = u10 * v1svd;
  const Matrix y = w1.adjoint() * u01;  // rows have norms sin(theta_k)

  std::vector<double> angles(static_cast<std::size_t>(n));
  RealVector cosv(n), sinv(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double sigma = std::clamp(svd.singularValues()[k], 0.0, 1.0);
    const double theta = std::atan2(x.col(k).norm(), sigma);
    angles[static_cast<std::size_t>(k)] = theta;
    cosv[k] = std::cos(theta);
    sinv[k] = std::sin(theta);
  }

  Matrix w2 = Matrix::Zero(n, n);
  Matrix v2 = Matrix::Zero(n, n);  // stored so that U11 = W2 C V2
  std::vector<Eigen::Index> small;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (sinv[k] > kSmallSine) {
      w2.col(k) = x.col(k) / x.col(k).norm();
      v2.row(k) = -y.row(k) / sinv[k];
    } else {
      small.push_back(k);
    }
  }

  if (!small.empty()) {
    // Residual of U11 after removing the known columns is (up to roundoff)
    // sum_{k in small} cos_k w2_k v2_k; its top singular triplets complete
    // the factors without dividing by small sines.
    Matrix residual = u11;
    for (Eigen::Index k = 0; k < n; ++k)
      if (sinv[k] > kSmallSine)
        residual -= cosv[k] * w2.col(k) * v2.row(k);
    Eigen::JacobiSVD<Matrix> rsvd(residual, Eigen::ComputeFullU | Eigen::ComputeFullV);
    for (std::size_t j = 0; j < small.size(); ++j) {
      const Eigen::Index k = small[j];
      w2.col(k) = rsvd.matrixU().col(static_cast<Eigen::Index>(j));
      v2.row(k) = rsvd.matrixV().col(static_cast<Eigen::Index>(j)).adjoint();
    }
  }

  CsdFactors f;
  f.w1 = w1;
  f.w2 = closest_unitary(w2);
  f.v1 = v1svd.adjoint();
  f.v2 = closest_unitary(v2);
  f.angles = std::move(angles);
  return f;
}

Matrix csd_reconstruct(const CsdFactors& f) {
  const Eigen::Index n = f.w1.rows();
  RealVector cosv(n), sinv(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    cosv[k] = std::cos(f.angles[static_cast<std::size_t>(k)]);
    sinv[k] = std::sin(f.angles[static_cast<std::size_t>(k)]);
  }
  Matrix u(2 * n, 2 * n);
  u.topLeftCorner(n, n) = f.w1 * cosv.asDiagonal() * f.v1;
  u.topRightCorner(n, n) = -f.w1 * sinv.asDiagonal() * f.v2;
  u.bottomLeftCorner(n, n) = f.w2 * sinv.asDiagonal() * f.v1;
  u.bottomRightCorner(n, n) = f.w2 * cosv.asDiagonal() * f.v2;
  return u;
}

int csd_param_count(int dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("csd_param_count: dim must be a power of two >= 2");
  if (dim == 2) return 4;
  return 4 * csd_param_count(dim / 2) + dim / 2;
}

Matrix euler_unitary(double phi, double a, double b, double c) {
  const Complex i(0.0, 1.0);
  Matrix rz_a(2, 2), ry_b(2, 2), rz_c(2, 2);
  rz_a << std::exp(-i * a / 2.0), 0.0, 0.0, std::exp(i * a / 2.0);
  ry_b << std::cos(b / 2.0), -std::sin(b / 2.0), std::sin(b / 2.0), std::cos(b / 2.0);
  rz_c << std::exp(-i * c / 2.0), 0.0, 0.0, std::exp(i * c / 2.0);
  return std::exp(i * phi) * rz_a * ry_b * rz_c;
}

Matrix csd_unitary(int qubits, std::span<const double> angles) {
  if (qubits < 1) throw std::invalid_argument("csd_unitary: qubit count must be >= 1");
  const int dim = 1 << qubits;
  if (static_cast<int>(angles.size()) != csd_param_count(dim))
    throw std::invalid_argument("csd_unitary: wrong parameter count");

  if (qubits == 1) return euler_unitary(angles[0], angles[1], angles[2], angles[3]);

  const int n = dim / 2;
  const int p = csd_param_count(n);
  const Matrix w1 = csd_unitary(qubits - 1, angles.subspan(0, p));
  const Matrix w2 = csd_unitary(qubits - 1, angles.subspan(p, p));
  const Matrix v1 = csd_unitary(qubits - 1, angles.subspan(2 * p, p));
  const Matrix v2 = csd_unitary(qubits - 1, angles.subspan(3 * p, p));

  RealVector cosv(n), sinv(n);
  for (int k = 0; k < n; ++k) {
    cosv[k] = std::cos(angles[static_cast<std::size_t>(4 * p + k)]);
    sinv[k] = std::sin(angles[static_cast<std::size_t>(4 * p + k)]);
  }

  Matrix u(dim, dim);
  u.topLeftCorner(n, n) = w1 * cosv.asDiagonal() * v1;
  u.topRightCorner(n, n) = -w1 * sinv.asDiagonal() * v2;
  u.bottomLeftCorner(n, n) = w2 * sinv.asDiagonal() * v1;
  u.bottomRightCorner(n, n) = w2 * cosv.asDiagonal() * v2;
  return u;
}

}  // namespace scf
