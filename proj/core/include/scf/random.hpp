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

#ifndef SCF_RANDOM_HPP_
#define SCF_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "scf/matrix.hpp"

namespace scf {

/// RNG streams are always passed explicitly; there is no global stream.
using Rng = std::mt19937_64;

/// Deterministically derive an independent stream seed from a master seed
/// and a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Matrix with i.i.d. standard complex Gaussian entries.
Matrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
/// phases folded into Q.
Matrix haar_unitary(int dim, Rng& rng);

/// Random density matrix (normalized G G^dag), for sampling tests.
Matrix random_density(int dim, Rng& rng);

}  // namespace scf

#endif  // SCF_RANDOM_HPP_
