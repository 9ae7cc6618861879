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

#include <doctest.h>

#include <vector>

#include "scf/matrix.hpp"
#include "scf/random.hpp"

using scf::Complex;
using scf::Matrix;

namespace {

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

Matrix pauli_y() {
  Matrix y(2, 2);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return y;
}

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

// Brute-force partial trace over explicit three-factor indices; independent
// of the stride bookkeeping in the library implementation.
Matrix brute_force_trace_last_of_three(const Matrix& m, int d0, int d1, int d2,
                                       bool keep0, bool keep1, bool keep2) {
  const int kept_dim = (keep0 ? d0 : 1) * (keep1 ? d1 : 1) * (keep2 ? d2 : 1);
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (int i0 = 0; i0 < d0; ++i0)
    for (int i1 = 0; i1 < d1; ++i1)
      for (int i2 = 0; i2 < d2; ++i2)
        for (int j0 = 0; j0 < d0; ++j0)
          for (int j1 = 0; j1 < d1; ++j1)
            for (int j2 = 0; j2 < d2; ++j2) {
              if (!keep0 && i0 != j0) continue;
              if (!keep1 && i1 != j1) continue;
              if (!keep2 && i2 != j2) continue;
              int r = 0, c = 0;
              if (keep0) { r = r * d0 + i0; c = c * d0 + j0; }
              if (keep1) { r = r * d1 + i1; c = c * d1 + j1; }
              if (keep2) { r = r * d2 + i2; c = c * d2 + j2; }
              out(r, c) += m((i0 * d1 + i1) * d2 + i2, (j0 * d1 + j1) * d2 + j2);
            }
  return out;
}

}  // namespace

TEST_CASE("tensor basics") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(scf::max_abs(scf::tensor(i2, i2) - Matrix::Identity(4, 4)) == 0.0);

  // (X (x) X)|00> = |11>
  scf::Vector ket00 = scf::Vector::Zero(4);
  ket00[0] = 1.0;
  const scf::Vector flipped = scf::tensor(pauli_x(), pauli_x()) * ket00;
  CHECK(std::abs(flipped[3] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(flipped[0]) + std::abs(flipped[1]) + std::abs(flipped[2]) < 1e-15);

  const Matrix a = Matrix::Random(2, 3), b = Matrix::Random(4, 5);
  const Matrix ab = scf::tensor(a, b);
  CHECK(ab.rows() == 8);
  CHECK(ab.cols() == 15);
}

TEST_CASE("tensor associativity holds to machine precision") {
  scf::Rng rng(11);
  const Matrix a = scf::ginibre(2, 2, rng);
  const Matrix b = scf::ginibre(3, 2, rng);
  const Matrix c = scf::ginibre(2, 4, rng);
  const Matrix left = scf::tensor(scf::tensor(a, b), c);
  const Matrix right = scf::tensor(a, scf::tensor(b, c));
  // complex multiplication rounds, so the two evaluation orders can differ
  // in the last ulp
  CHECK(scf::max_abs(left - right) < 4e-15);
}

TEST_CASE("partial trace of a product state") {
  scf::Rng rng(5);
  const Matrix a = scf::random_density(3, rng);
  const Matrix b = scf::random_density(4, rng);
  const Matrix reduced =
      scf::partial_trace(scf::tensor(a, b), scf::DimVector{3, 4}, {0});
  CHECK(scf::max_abs(reduced - b.trace() * a) < 1e-14);
}

TEST_CASE("partial trace of the maximally entangled state") {
  const int d = 3;
  scf::Vector omega = scf::Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega[i * d + i] = 1.0 / std::sqrt(double(d));
  const Matrix proj = omega * omega.adjoint();
  const Matrix reduced = scf::partial_trace(proj, scf::DimVector{d, d}, {1});
  CHECK(scf::max_abs(reduced - Matrix::Identity(d, d) / d) < 1e-15);
}

TEST_CASE("partial trace matches the brute-force index sum") {
  scf::Rng rng(42);
  Matrix h = scf::ginibre(8, 8, rng);
  h = ((h + h.adjoint()) / 2).eval();
  const scf::DimVector dims{2, 2, 2};

  const Matrix keep01 = scf::partial_trace(h, dims, {0, 1});
  CHECK(scf::max_abs(keep01 - brute_force_trace_last_of_three(h, 2, 2, 2, true, true, false)) < 1e-12);

  const Matrix keep2 = scf::partial_trace(h, dims, {2});
  CHECK(scf::max_abs(keep2 - brute_force_trace_last_of_three(h, 2, 2, 2, false, false, true)) < 1e-12);

  const Matrix keep02 = scf::partial_trace(h, dims, {0, 2});
  CHECK(scf::max_abs(keep02 - brute_force_trace_last_of_three(h, 2, 2, 2, true, false, true)) < 1e-12);

  // tracing everything equals the scalar trace
  const Matrix all = scf::partial_trace(h, dims, {});
  CHECK(std::abs(all(0, 0) - h.trace()) < 1e-12);
}

TEST_CASE("partial trace rejects bad arguments") {
  const Matrix m = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(scf::partial_trace(m, scf::DimVector{2, 2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(scf::partial_trace(m, scf::DimVector{2, 3}, {0}), std::invalid_argument);
}

TEST_CASE("permute_subsystems swaps tensor factors") {
  scf::Rng rng(7);
  const Matrix a = scf::ginibre(2, 2, rng);
  const Matrix b = scf::ginibre(3, 3, rng);
  const Matrix swapped =
      scf::permute_subsystems(scf::tensor(a, b), scf::DimVector{2, 3}, {1, 0});
  CHECK(scf::max_abs(swapped - scf::tensor(b, a)) < 1e-14);
}

TEST_CASE("trace distance on known states") {
  Matrix ket0 = Matrix::Zero(2, 2), ket1 = Matrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  ket1(1, 1) = 1.0;
  CHECK(scf::trace_distance(ket0, ket0) == 0.0);
  CHECK(scf::trace_distance(ket0, ket1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(scf::trace_distance(Matrix::Identity(2, 2) / 2, ket0) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trace distance is a metric on sampled triples") {
  scf::Rng rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = scf::random_density(4, rng);
    const Matrix b = scf::random_density(4, rng);
    const Matrix c = scf::random_density(4, rng);
    const double ab = scf::trace_distance(a, b);
    const double ba = scf::trace_distance(b, a);
    const double ac = scf::trace_distance(a, c);
    const double cb = scf::trace_distance(c, b);
    CHECK(std::abs(ab - ba) < 1e-14);
    CHECK(ab <= ac + cb + 1e-12);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0 + 1e-12);
  }
}

TEST_CASE("trace distance rejects bad inputs") {
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(scf::trace_distance(i2, i3), std::invalid_argument);
  Matrix nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(scf::trace_distance(nonherm, i2), std::invalid_argument);
}

TEST_CASE("psd_sqrt on diagonal and identity") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  CHECK(scf::max_abs(scf::psd_sqrt(d) - expected) < 1e-14);
  CHECK(scf::max_abs(scf::psd_sqrt(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)) < 1e-14);
}

TEST_CASE("psd_sqrt reconstructs a random PSD matrix") {
  scf::Rng rng(9);
  const Matrix g = scf::ginibre(4, 4, rng);
  const Matrix psd = ((g * g.adjoint()) / 4.0).eval();
  const Matrix r = scf::psd_sqrt(0.5 * (psd + psd.adjoint().eval()));
  CHECK(scf::max_abs(r * r - psd) < 1e-12);
}

TEST_CASE("psd_sqrt rejects indefinite input") {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -1.0;
  CHECK_THROWS_AS(scf::psd_sqrt(m), std::invalid_argument);
}

TEST_CASE("operator_set_rank on Pauli and collinear sets") {
  const std::vector<Matrix> paulis = {Matrix::Identity(2, 2), pauli_x(), pauli_y(), pauli_z()};
  CHECK(scf::operator_set_rank(paulis) == 4);

  const std::vector<Matrix> collinear = {Matrix::Identity(2, 2), 2.0 * Matrix::Identity(2, 2)};
  CHECK(scf::operator_set_rank(collinear) == 1);

  scf::Rng rng(31);
  std::vector<Matrix> random_ops;
  for (int i = 0; i < 5; ++i) random_ops.push_back(scf::ginibre(2, 2, rng));
  CHECK(scf::operator_set_rank(random_ops) == 4);

  CHECK_THROWS_AS(scf::operator_set_rank(std::span<const Matrix>{}), std::invalid_argument);
}

TEST_CASE("operator_schmidt_rank distinguishes product operators") {
  scf::Rng rng(63);
  const Matrix a = scf::random_density(2, rng);
  const Matrix b = scf::random_density(2, rng);
  CHECK(scf::operator_schmidt_rank(scf::tensor(a, b), 2, 2) == 1);

  scf::Vector omega = scf::Vector::Zero(4);
  omega[0] = omega[3] = 1.0 / std::sqrt(2.0);
  CHECK(scf::operator_schmidt_rank(Matrix(omega * omega.adjoint()), 2, 2) > 1);
}

TEST_CASE("tolerance is configurable") {
  CHECK(scf::tolerance() == 1e-10);
  scf::set_tolerance(1e-8);
  CHECK(scf::tolerance() == 1e-8);
  scf::set_tolerance(1e-10);
  CHECK_THROWS_AS(scf::set_tolerance(0.0), std::invalid_argument);
}
