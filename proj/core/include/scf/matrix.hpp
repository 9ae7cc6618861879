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

#ifndef SCF_MATRIX_HPP_
#define SCF_MATRIX_HPP_

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace scf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Global numeric tolerance used by all structural predicates
/// (hermiticity, unitarity, positivity, rank cutoffs). Default 1e-10.
double tolerance();
void set_tolerance(double tol);

/// Ordered list of subsystem dimensions for a composite space.
struct DimVector {
  std::vector<int> dims;

  DimVector() = default;
  DimVector(std::initializer_list<int> d) : dims(d) {}
  explicit DimVector(std::vector<int> d) : dims(std::move(d)) {}

  int size() const { return static_cast<int>(dims.size()); }
  int total() const;
  int operator[](int i) const { return dims[static_cast<std::size_t>(i)]; }
};

double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = -1.0);
bool is_unitary(const Matrix& m, double tol = -1.0);
bool is_psd(const Matrix& m, double tol = -1.0);

/// Kronecker product, dims (rowsA*rowsB) x (colsA*colsB).
Matrix tensor(const Matrix& a, const Matrix& b);

/// Trace out every subsystem not listed in `keep`. `keep` must be strictly
/// ascending indices into `dims`; the result keeps the original factor order.
Matrix partial_trace(const Matrix& m, const DimVector& dims,
                     const std::vector<int>& keep);

/// Reorder tensor factors: new factor j is old factor perm[j].
Matrix permute_subsystems(const Matrix& m, const DimVector& dims,
                          const std::vector<int>& perm);

/// (1/2) * sum of |eigenvalues| of (rho - sigma). Inputs must be Hermitian
/// and of equal dimension.
double trace_distance(const Matrix& rho, const Matrix& sigma);

/// PSD square root via eigendecomposition. Eigenvalues in (-tol, 0) are
/// clipped to zero; anything below -tol is rejected.
Matrix psd_sqrt(const Matrix& m);

/// Moore-Penrose pseudo-inverse of a PSD square root: eigenvalues below the
/// rank cutoff are dropped instead of inverted.
Matrix psd_sqrt_pinv(const Matrix& m, double tol = -1.0);

/// Number of eigenvalues of a Hermitian PSD matrix above the tolerance.
int psd_rank(const Matrix& m, double tol = -1.0);

/// Dimension of the span of a set of equally-shaped operators, computed as
/// the rank of the Gram matrix G_pq = tr(Op^dag Oq).
int operator_set_rank(std::span<const Matrix> ops, double tol = -1.0);

/// Number of nonzero operator-Schmidt coefficients of m across the
/// (dim_a) x (dim_b) bipartition. 1 means a product operator.
int operator_schmidt_rank(const Matrix& m, int dim_a, int dim_b,
                          double tol = -1.0);

/// Nearest unitary in Frobenius norm (polar factor via SVD).
Matrix closest_unitary(const Matrix& m);

}  // namespace scf

#endif  // SCF_MATRIX_HPP_
