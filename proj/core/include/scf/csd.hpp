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

#ifndef SCF_CSD_HPP_
#define SCF_CSD_HPP_

#include <span>
#include <vector>

#include "scf/matrix.hpp"

namespace scf {

/// Cosine-sine factors of a 2n x 2n unitary over the balanced partition:
///
///   U = [W1  0 ] [C -S] [V1  0 ]
///       [0   W2] [S  C] [0   V2]
///
/// with C = diag(cos(angles)), S = diag(sin(angles)), all angles in
/// [0, pi/2] sorted ascending.
struct CsdFactors {
  Matrix w1, w2, v1, v2;
  std::vector<double> angles;
};

/// Cosine-sine decomposition of an even-dimensional unitary.
CsdFactors csd(const Matrix& u);

/// Reassemble the unitary from its factors.
Matrix csd_reconstruct(const CsdFactors& f);

/// Angle count P(dim) of the recursive CSD parametrization:
/// P(2) = 4, P(2m) = 4 P(m) + m. dim must be a power of two >= 2.
int csd_param_count(int dim);

/// e^{i phi} Rz(a) Ry(b) Rz(c); all-zero angles give the identity.
Matrix euler_unitary(double phi, double a, double b, double c);

/// Unitary on `qubits` qubits built by the CSD recursion from
/// P(2^qubits) angles. All-zero angles give the identity.
Matrix csd_unitary(int qubits, std::span<const double> angles);

}  // namespace scf

#endif  // SCF_CSD_HPP_
