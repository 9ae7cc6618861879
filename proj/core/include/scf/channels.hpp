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

#ifndef SCF_CHANNELS_HPP_
#define SCF_CHANNELS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "scf/matrix.hpp"
#include "scf/random.hpp"

namespace scf {

/// Completely positive trace-preserving map in Kraus form. Operators are
/// d_out x d_in and satisfy sum_i K_i^dag K_i = I within tolerance.
struct KrausChannel {
  std::vector<Matrix> kraus;
  int d_in = 0;
  int d_out = 0;
};

/// Choi state of a channel: (E (x) id)(|omega><omega|) with the output
/// factor first and trace normalized to 1. Trace-preservation reads
/// tr_out(omega) = I/d_in in this convention.
struct ChoiState {
  Matrix matrix;
  int d_in = 0;
  int d_out = 0;
};

/// Number of nonzero Kraus operators.
int kraus_rank(const KrausChannel& ch, double tol = -1.0);

/// Structural check: operator shapes plus the completeness sum.
bool is_cptp(const KrausChannel& ch, double tol = -1.0);

/// Largest deviation of sum_i K_i^dag K_i from the identity.
double completeness_residual(const KrausChannel& ch);

/// Structural check: PSD and tr_out(omega) = I/d_in, trace 1.
bool is_valid_choi(const ChoiState& w, double tol = -1.0);

Matrix apply_channel(const KrausChannel& ch, const Matrix& rho);

ChoiState choi_from_kraus(const KrausChannel& ch);

/// Kraus operators from the scaled eigenvectors of the Choi state.
/// The result is a minimal (linearly independent) Kraus set.
KrausChannel kraus_from_choi(const ChoiState& w);

/// Minimal Kraus set for an arbitrary one (round-trip through the Choi state).
KrausChannel canonicalize(const KrausChannel& ch);

/// Choi's criterion: extreme iff {K_i^dag K_j} is linearly independent for a
/// minimal Kraus set. Canonicalizes internally.
bool is_extreme(const KrausChannel& ch);

/// Choi rank at most d_in.
bool is_gen_extreme(const KrausChannel& ch);

/// sum_i K_i K_i^dag = I. Requires d_in = d_out.
bool is_unital(const KrausChannel& ch);

/// Environment state of the channel: entries tr(K_j^dag K_i rho) at (i, j).
Matrix complementary_channel(const KrausChannel& ch, const Matrix& rho);

/// Pair (E(I), sigma) quantifying non-unitality: E(I) = sum K K^dag and the
/// Gram matrix sigma_ij = tr(K_j^dag K_i), which has trace d.
std::pair<Matrix, Matrix> nonunitality_witnesses(const KrausChannel& ch);

/// Rank <= 2 qubit channel from a parametrized two-qubit circuit:
/// U = U_post * [[C,-S],[S,C]] * U_pre with U_pre, U_post CSD-parametrized
/// U(4) blocks, C = diag(cos t1, cos t2), and Kraus operators read off the
/// first block column of U. Layout: [pre P(4) | post P(4) | t1 t2].
struct GenExtremeQubitAnsatz {
  std::vector<double> angles;

  static constexpr int kParamCount = 38;  // P(4) + P(4) + 2
};

KrausChannel gen_extreme_channel(const GenExtremeQubitAnsatz& ansatz);

/// Convenience form of the same family with explicit blocks:
/// K_0 = W1 C V, K_1 = W2 S V.
KrausChannel gen_extreme_channel_blocks(const Matrix& v, const Matrix& w1,
                                        const Matrix& w2, double theta1,
                                        double theta2);

/// Canonical two-parameter gen-extreme qubit Kraus pair
///   F_0 = diag(cos beta, cos alpha), F_1 = [[0, sin alpha], [sin beta, 0]].
struct RswCanonicalPair {
  double alpha = 0.0;
  double beta = 0.0;
};

KrausChannel rsw_canonical_channel(const RswCanonicalPair& p);

/// Isometry V = sum_i |i> U_i sqrt(C_i) extracted from the block form of a
/// gen-extreme Choi state (U_0 = I gauge, pseudo-inverse square roots).
/// V is (d_out * d_in) x d_in with V^dag V = I.
Matrix choi_to_isometry(const ChoiState& w);

/// Kraus operators induced by a Stinespring block isometry as produced by
/// choi_to_isometry.
KrausChannel kraus_from_isometry(const Matrix& v, int d_out, int d_in);

/// Exact decomposition of a qubit channel into two gen-extreme qubit
/// channels averaging to it. Both factors share the target's diagonal
/// Choi blocks. Throws if the reconstruction residual exceeds 1e-8.
std::pair<KrausChannel, KrausChannel> rsw_decompose(const KrausChannel& ch);

/// after o before, Kraus products {A_i B_j}.
KrausChannel compose_channels(const KrausChannel& after, const KrausChannel& before);

KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const Matrix& u);
KrausChannel amplitude_damping_channel(double gamma);
KrausChannel completely_depolarizing_channel(int d);

/// Channel from a Haar-random Stinespring isometry with the given Kraus rank.
KrausChannel random_kraus_channel(int d_in, int d_out, int rank, Rng& rng);

}  // namespace scf

#endif  // SCF_CHANNELS_HPP_
