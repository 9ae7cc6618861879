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

#include "scf/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scf {

namespace {

std::atomic<double> g_tolerance{1e-10};

double resolve(double tol) { return tol < 0.0 ? tolerance() : tol; }

}  // namespace

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  g_tolerance.store(tol, std::memory_order_relaxed);
}

int DimVector::total() const {
  int t = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimensions must be positive");
    t *= d;
  }
  return t;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint().eval()) <= resolve(tol);
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix residual = m.adjoint() * m - Matrix::Identity(m.cols(), m.cols());
  return max_abs(residual) <= resolve(tol);
}

bool is_psd(const Matrix& m, double tol) {
  const double t = resolve(tol);
  if (!is_hermitian(m, t)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -t;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, const DimVector& dims,
                     const std::vector<int>& keep) {
  const int n = dims.size();
  const int total = dims.total();
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_trace: matrix dimension does not match dims");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep indices must be strictly ascending");
  }

  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);

  // strides of each factor in the flattened row index (row-major over factors)
  std::vector<long> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * dims[i + 1];

  long keep_total = 1;
  for (int k : keep) keep_total *= dims[k];
  long traced_total = 1;
  for (int t : traced) traced_total *= dims[t];

  Matrix out = Matrix::Zero(keep_total, keep_total);

  // decode a linear index over the kept (resp. traced) factors into an offset
  auto offset_of = [&](const std::vector<int>& subsys, long linear) {
    long off = 0;
    for (int i = static_cast<int>(subsys.size()) - 1; i >= 0; --i) {
      const int s = subsys[static_cast<std::size_t>(i)];
      off += (linear % dims[s]) * stride[static_cast<std::size_t>(s)];
      linear /= dims[s];
    }
    return off;
  };

  for (long r = 0; r < keep_total; ++r) {
    const long row_base = offset_of(keep, r);
    for (long c = 0; c < keep_total; ++c) {
      const long col_base = offset_of(keep, c);
      Complex acc = 0.0;
      for (long t = 0; t < traced_total; ++t) {
        const long off = offset_of(traced, t);
        acc += m(row_base + off, col_base + off);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix permute_subsystems(const Matrix& m, const DimVector& dims,
                          const std::vector<int>& perm) {
  const int n = dims.size();
  const int total = dims.total();
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("permute_subsystems: matrix dimension does not match dims");
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_subsystems: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("permute_subsystems: invalid permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }

  std::vector<long> stride(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * dims[i + 1];

  // index_map[new linear index] = old linear index
  std::vector<long> index_map(static_cast<std::size_t>(total));
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    long old_idx = 0;
    for (int j = n - 1; j >= 0; --j) {
      const int old_factor = perm[static_cast<std::size_t>(j)];
      old_idx += (rem % dims[old_factor]) * stride[static_cast<std::size_t>(old_factor)];
      rem /= dims[old_factor];
    }
    index_map[static_cast<std::size_t>(idx)] = old_idx;
  }

  Matrix out(total, total);
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c)
      out(r, c) = m(index_map[static_cast<std::size_t>(r)],
                    index_map[static_cast<std::size_t>(c)]);
  return out;
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  if (!is_hermitian(rho) || !is_hermitian(sigma))
    throw std::invalid_argument("trace_distance: inputs must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Matrix psd_sqrt(const Matrix& m) {
  if (!is_hermitian(m)) throw std::invalid_argument("psd_sqrt: input must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double tol = tolerance();
  RealVector vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -tol)
      throw std::invalid_argument("psd_sqrt: input has a negative eigenvalue beyond tolerance");
    vals[i] = std::sqrt(std::max(vals[i], 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix psd_sqrt_pinv(const Matrix& m, double tol) {
  if (!is_hermitian(m)) throw std::invalid_argument("psd_sqrt_pinv: input must be Hermitian");
  const double t = resolve(tol);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  RealVector vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    vals[i] = vals[i] > t ? 1.0 / std::sqrt(vals[i]) : 0.0;
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

int psd_rank(const Matrix& m, double tol) {
  const double t = resolve(tol);
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()[i] > t) ++rank;
  return rank;
}

int operator_set_rank(std::span<const Matrix> ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("operator_set_rank: empty operator list");
  const Eigen::Index rows = ops[0].rows(), cols = ops[0].cols();
  const std::size_t n = ops.size();
  Matrix gram(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (ops[p].rows() != rows || ops[p].cols() != cols)
      throw std::invalid_argument("operator_set_rank: operators must share dimensions");
    for (std::size_t q = 0; q <= p; ++q) {
      const Complex g = (ops[p].adjoint() * ops[q]).trace();
      gram(p, q) = g;
      gram(q, p) = std::conj(g);
    }
  }
  return psd_rank(gram, tol);
}

int operator_schmidt_rank(const Matrix& m, int dim_a, int dim_b, double tol) {
  if (m.rows() != static_cast<long>(dim_a) * dim_b || m.rows() != m.cols())
    throw std::invalid_argument("operator_schmidt_rank: dimension mismatch");
  const double t = resolve(tol);
  // reshuffle: R[(ra,ca),(rb,cb)] = m[(ra,rb),(ca,cb)]
  Matrix r(dim_a * dim_a, dim_b * dim_b);
  for (int ra = 0; ra < dim_a; ++ra)
    for (int ca = 0; ca < dim_a; ++ca)
      for (int rb = 0; rb < dim_b; ++rb)
        for (int cb = 0; cb < dim_b; ++cb)
          r(ra * dim_a + ca, rb * dim_b + cb) = m(ra * dim_b + rb, ca * dim_b + cb);
  Eigen::JacobiSVD<Matrix> svd(r);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > t) ++rank;
  return rank;
}

Matrix closest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace scf
