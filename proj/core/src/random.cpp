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

#include "scf/random.hpp"

#include <cmath>
#include <stdexcept>

namespace scf {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix ginibre(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("ginibre: dimensions must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

Matrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    // zero diagonal has measure zero; keep the column as-is if it happens
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

Matrix random_density(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  // symmetrize away the last ulps so predicates see an exactly Hermitian matrix
  return 0.5 * (rho + rho.adjoint().eval());
}

}  // namespace scf
