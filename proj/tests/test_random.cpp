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

#include <cmath>

#include "scf/random.hpp"

using scf::Matrix;

TEST_CASE("haar_unitary produces unitaries") {
  scf::Rng rng(2026);
  for (int dim : {1, 2, 8}) {
    const Matrix u = scf::haar_unitary(dim, rng);
    CHECK(scf::max_abs(u.adjoint() * u - Matrix::Identity(dim, dim)) < 1e-12);
  }
}

TEST_CASE("haar_unitary dim 1 is a phase") {
  scf::Rng rng(4);
  const Matrix u = scf::haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
}

TEST_CASE("haar_unitary is deterministic per seed") {
  scf::Rng a(99), b(99);
  const Matrix ua = scf::haar_unitary(8, a);
  const Matrix ub = scf::haar_unitary(8, b);
  CHECK((ua.array() == ub.array()).all());
}

TEST_CASE("haar_unitary is statistically left-invariant") {
  // E|u_00|^2 = 1/d for Haar; compare the raw ensemble against one
  // left-multiplied by a fixed unitary.
  const int dim = 2, samples = 4000;
  scf::Rng rng(7);
  const Matrix fixed = scf::haar_unitary(dim, rng);
  double mean_raw = 0.0, mean_rotated = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Matrix u = scf::haar_unitary(dim, rng);
    mean_raw += std::norm(u(0, 0));
    mean_rotated += std::norm((fixed * u)(0, 0));
  }
  mean_raw /= samples;
  mean_rotated /= samples;
  CHECK(std::abs(mean_raw - 0.5) < 0.03);
  CHECK(std::abs(mean_rotated - 0.5) < 0.03);
  CHECK(std::abs(mean_raw - mean_rotated) < 0.04);
}

TEST_CASE("derive_seed decorrelates streams") {
  CHECK(scf::derive_seed(1, 0) != scf::derive_seed(1, 1));
  CHECK(scf::derive_seed(1, 0) != scf::derive_seed(2, 0));
  CHECK(scf::derive_seed(5, 3) == scf::derive_seed(5, 3));
}
