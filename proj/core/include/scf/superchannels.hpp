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

#ifndef SCF_SUPERCHANNELS_HPP_
#define SCF_SUPERCHANNELS_HPP_

#include <span>
#include <vector>

#include "scf/channels.hpp"
#include "scf/matrix.hpp"
#include "scf/random.hpp"

namespace scf {

/// Pre/post unitary realization of a superchannel on d-dimensional systems.
///
/// Wire convention (system always the least-significant tensor factor):
///   pre  V: (anc1 (x) sys) -> (mem (x) env_pre (x) sys), dim d*a1
///   post W: (mem (x) anc2 (x) sys) -> (env_post (x) sys), dim d*m*a2
/// Both fresh ancillas start in |0>. The memory dimension m is inferred from
/// W as m = dim(W) / (d * a2) and must divide a1; the non-memory part of V's
/// output ancilla (dimension a1/m) is traced out.
struct Superchannel {
  Matrix pre;
  Matrix post;
  int d = 0;
  int a1 = 1;
  int a2 = 1;

  int memory() const { return static_cast<int>(post.rows()) / (d * a2); }
  int env_pre() const { return a1 / memory(); }
  int env_post() const { return static_cast<int>(post.rows()) / d; }
};

bool is_valid_superchannel(const Superchannel& sc, double tol = -1.0);

/// Kraus operators of the superchannel action on Choi states:
/// S_(e,a) = sum_m K_w^{m,a} (x) K_v^{m,e} with K_v^{m,e} = <m,e|V|0> and
/// K_w^{m,a} = <a|W|m,0>. Completeness: sum S^dag S = I on the d^2 space.
struct SuperKraus {
  std::vector<Matrix> ops;
  int d = 0;
};

SuperKraus super_kraus(const Superchannel& sc);

double super_completeness_residual(const SuperKraus& sk);

/// Minimal superchannel Kraus set via the eigendecomposition of the
/// doubled-space Choi state.
SuperKraus canonicalize_super_kraus(const SuperKraus& sk);

/// Output channel of the superchannel applied to `ch`:
/// F_i^{(e,a)} = sum_m K_w^{m,a} K_i (K_v^{m,e})^T.
KrausChannel apply_superchannel(const Superchannel& sc, const KrausChannel& ch);

/// Choi state of the superchannel on the doubled Choi space, d^4 x d^4,
/// PSD, trace 1. Tensor factors are ordered (H_3, H_2, H_1, H_0):
///   H_0 comb input, H_1 slot input, H_2 slot output, H_3 comb output.
struct SuperChoi {
  Matrix matrix;
  int d = 0;

  static constexpr const char* kSpaceOrder = "H3,H2,H1,H0";
};

SuperChoi super_choi(const Superchannel& sc);
SuperChoi super_choi_from_kraus(const SuperKraus& sk);

/// Reinterpret the superchannel as an ordinary channel on the d^2 space
/// (Choi factors reordered to output-pair-first).
ChoiState as_channel_choi(const SuperChoi& w);

/// Choi rank of the superchannel.
int super_choi_rank(const SuperChoi& w, double tol = -1.0);

/// Causality structure of a one-slot comb: PSD, trace 1, and the marginal
/// over H_3 factorizes as I/d (x) omega with omega a valid channel Choi
/// state on (H_1, H_0).
bool comb_validity(const SuperChoi& w);

/// Free parameter count of an n-superchannel Choi state on qudits:
/// y_n = d^2 (d^{4(n+1)} - 1) / (d^2 + 1), with y_0 = d^2 (d^2 - 1).
long long parameter_count(int n, int d);

/// Necessary extremality condition: {S_a^dag S_b} linearly independent for
/// a minimal Kraus set. Canonicalizes internally.
bool super_extreme_necessary(const SuperKraus& sk);

/// Gen-extreme superchannel circuit families. Angle layout is the pre
/// unitary's CSD parameters followed by the post unitary's.
///   type I  : V in U(d^3), W in U(d^3), memory d^2   (P(8)+P(8) for d=2)
///   type II : V in U(d^2), W in U(d^3), memory d     (P(4)+P(8))
///   type III: V in U(d^2), W in U(d^2), no memory    (P(4)+P(4))
enum class SuperCircuitType { kTypeI, kTypeII, kTypeIII };

struct GenExtremeSuperCircuit {
  SuperCircuitType circuit_type = SuperCircuitType::kTypeI;
  std::vector<double> angles;
};

int gen_extreme_super_param_count(SuperCircuitType type);

Superchannel gen_extreme_super(const GenExtremeSuperCircuit& c);

/// Rank-8 qubit superchannel family: V in U(8), W in U(16) over
/// system(2) * memory(4) * fresh qubit(2); P(8) + P(16) angles.
Superchannel rank8_superchannel(std::span<const double> angles);
int rank8_param_count();

/// Marginal conditions on the superchannel Choi state:
///   IP: R_{[0,1,3]} = I_3 (x) R_{[0,1]}
///   DS: IP and R_{[1,3]} = I
///   UP: R_{[1,3]} = I and R_{[1,2,3]} = I_1 (x) R_{[2,3]}
struct UnitalClassFlags {
  bool identity_preserving = false;
  bool doubly_stochastic = false;
  bool unital_preserving = false;
};

UnitalClassFlags unital_class_check(const Superchannel& sc);

/// Environment state of the superchannel: entries tr(S_b^dag S_a omega)
/// at (a, b); PSD, trace 1 for a valid channel Choi input.
Matrix complementary_superchannel(const SuperKraus& sk, const ChoiState& w);

enum class SuperchannelClass { kFull, kRank8, kGenExtreme };

/// Haar-random superchannel of the given class (qubit systems):
/// full V in U(8), W in U(32); rank8 W in U(16); gen-extreme W in U(8)
/// in type-I wiring.
Superchannel random_superchannel(SuperchannelClass cls, Rng& rng);

Superchannel identity_superchannel(int d);

/// Shared-randomness Pauli conjugation on both sides of the slot
/// (pre P_k, post P_k with a common index carried by the memory).
Superchannel pauli_twirl_superchannel();

}  // namespace scf

#endif  // SCF_SUPERCHANNELS_HPP_
