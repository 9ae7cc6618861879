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

// End-to-end acceptance suite. Each criterion prints a single PASS/FAIL
// line; the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "scf/channels.hpp"
#include "scf/decompose.hpp"
#include "scf/matrix.hpp"
#include "scf/random.hpp"
#include "scf/superchannels.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using scf::Matrix;

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%s, %.1f s)\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Exact qubit-channel decomposition on 100 seeded random channels.
void criterion_rsw() {
  const auto start = Clock::now();
  int ok_count = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    scf::Rng rng(scf::derive_seed(1001, static_cast<std::uint64_t>(trial)));
    const scf::KrausChannel ch = scf::random_kraus_channel(2, 2, 4, rng);
    const Matrix target = scf::choi_from_kraus(ch).matrix;
    const auto [g1, g2] = scf::rsw_decompose(ch);
    const Matrix w1 = scf::choi_from_kraus(g1).matrix;
    const Matrix w2 = scf::choi_from_kraus(g2).matrix;
    const double dist = scf::trace_distance(0.5 * (w1 + w2), target);
    worst = std::max(worst, dist);
    if (dist <= 1e-10 && scf::psd_rank(w1) <= 2 && scf::psd_rank(w2) <= 2) ++ok_count;
  }
  const double secs = elapsed(start);
  report(1, "RSW exactness on 100 random qubit channels",
         ok_count == 100 && secs < 5.0,
         "worst reconstruction distance " + std::to_string(worst) + ", " +
             std::to_string(ok_count) + "/100 within 1e-10",
         secs);
}

// 2. Choi<->Kraus roundtrips, superchannel completeness, and the
//    Kraus-action/output-channel consistency check.
void criterion_duality() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;

  double worst_roundtrip = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    scf::Rng rng(scf::derive_seed(2001, static_cast<std::uint64_t>(trial)));
    const int d = trial % 2 == 0 ? 2 : 3;
    const int rank = trial % 4 + 1;
    const scf::KrausChannel ch = scf::random_kraus_channel(d, d, rank, rng);
    const scf::ChoiState w = scf::choi_from_kraus(ch);
    const scf::KrausChannel back = scf::kraus_from_choi(w);
    worst_roundtrip =
        std::max(worst_roundtrip,
                 scf::trace_distance(scf::choi_from_kraus(back).matrix, w.matrix));
  }
  ok = ok && worst_roundtrip <= 1e-10;
  detail += "roundtrip " + std::to_string(worst_roundtrip);

  double worst_completeness = 0.0;
  double worst_consistency = 0.0;
  const scf::SuperchannelClass classes[] = {scf::SuperchannelClass::kFull,
                                            scf::SuperchannelClass::kRank8,
                                            scf::SuperchannelClass::kGenExtreme};
  for (int trial = 0; trial < 50; ++trial) {
    scf::Rng rng(scf::derive_seed(2002, static_cast<std::uint64_t>(trial)));
    const scf::Superchannel sc = scf::random_superchannel(classes[trial % 3], rng);
    const scf::SuperKraus sk = scf::super_kraus(sc);
    worst_completeness = std::max(worst_completeness, scf::super_completeness_residual(sk));

    const scf::KrausChannel ch = scf::random_kraus_channel(2, 2, trial % 4 + 1, rng);
    const Matrix direct = scf::choi_from_kraus(scf::apply_superchannel(sc, ch)).matrix;
    Matrix via_kraus = Matrix::Zero(4, 4);
    const Matrix omega = scf::choi_from_kraus(ch).matrix;
    for (const Matrix& s : sk.ops) via_kraus += s * omega * s.adjoint();
    worst_consistency = std::max(worst_consistency, scf::max_abs(direct - via_kraus));
  }
  ok = ok && worst_completeness <= 1e-10 && worst_consistency <= 1e-10;
  detail += ", completeness " + std::to_string(worst_completeness) + ", consistency " +
            std::to_string(worst_consistency);

  const double secs = elapsed(start);
  report(2, "duality and superchannel consistency suite", ok && secs < 30.0, detail, secs);
}

// 3. Parameter-counting closed form and recursion.
void criterion_parameter_count() {
  const auto start = Clock::now();
  bool ok = scf::parameter_count(0, 2) == 12 && scf::parameter_count(1, 2) == 204;
  for (int d = 2; d <= 5 && ok; ++d) {
    long long power = 1;
    for (int i = 0; i < 6; ++i) power *= d;
    long long expected = static_cast<long long>(d) * d * (d * d - 1);
    if (scf::parameter_count(0, d) != expected) ok = false;
    for (int n = 1; n <= 4 && ok; ++n) {
      expected += (static_cast<long long>(d) * d - 1) * power;
      if (scf::parameter_count(n, d) != expected) ok = false;
      power *= static_cast<long long>(d) * d * d * d;
    }
  }
  const double secs = elapsed(start);
  report(3, "parameter-counting reproduction", ok && secs < 1.0,
         "y_0(2) = " + std::to_string(scf::parameter_count(0, 2)) + ", y_1(2) = " +
             std::to_string(scf::parameter_count(1, 2)) + ", recursion exact for n <= 4, d <= 5",
         secs);
}

// 4. Two-term convex decomposition of 20 random qubit channels.
void criterion_channel_decomposition() {
  const auto start = Clock::now();
  int hits = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    scf::Rng rng(scf::derive_seed(4001, static_cast<std::uint64_t>(trial)));
    const scf::KrausChannel target = scf::random_kraus_channel(2, 2, 4, rng);
    scf::DecomposeOptions opts;
    opts.budget = 50000;
    opts.tol = 1e-3;
    opts.seed = scf::derive_seed(4002, static_cast<std::uint64_t>(trial));
    const scf::DecompositionResult r = scf::decompose_channel(target, 2, opts);
    worst = std::max(worst, r.best_distance);
    if (r.best_distance <= 1e-3) ++hits;
  }
  const double secs = elapsed(start);
  report(4, "channel decomposition (two gen-extreme terms, 20 instances)",
         hits >= 16 && secs < 900.0,
         std::to_string(hits) + "/20 within 1e-3, worst " + std::to_string(worst), secs);
}

// 5. The four superchannel decomposition tasks at desk scale.
void criterion_table() {
  const auto start = Clock::now();
  scf::TableConfig cfg;
  cfg.instances = 10;
  cfg.budget = 500000;
  cfg.seed = 5001;
  cfg.tol = 5e-3;
  const scf::TableReport report_data = scf::run_table_tasks(cfg);

  double med[4] = {1, 1, 1, 1};
  for (const scf::TableSummary& s : report_data.summaries)
    med[static_cast<int>(s.task)] = s.median;
  const double m_s2r8 = med[static_cast<int>(scf::TableTask::kSTo2R8)];
  const double m_s4g = med[static_cast<int>(scf::TableTask::kSTo4G)];
  const double m_r82g = med[static_cast<int>(scf::TableTask::kR8To2G)];
  const double m_r84g = med[static_cast<int>(scf::TableTask::kR8To4G)];

  const bool ok = m_s4g <= 5e-3 && m_s2r8 <= 5e-3 && m_r84g <= 5e-3 && m_r82g >= 5e-3;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "medians: S->2r8 %.2e, S->4g %.2e, r8->2g %.2e (plateau expected), r8->4g %.2e",
                m_s2r8, m_s4g, m_r82g, m_r84g);
  const double secs = elapsed(start);
  report(5, "superchannel decomposition tasks at desk scale", ok && secs < 7200.0, buf, secs);
}

// 6. Always-on structural properties.
void criterion_properties() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail = "";

  scf::Rng rng(6001);
  for (const auto cls : {scf::SuperchannelClass::kFull, scf::SuperchannelClass::kRank8,
                         scf::SuperchannelClass::kGenExtreme}) {
    for (int trial = 0; trial < 5; ++trial)
      if (!scf::comb_validity(scf::super_choi(scf::random_superchannel(cls, rng)))) ok = false;
  }
  if (!ok) detail += "comb validity failed; ";

  const scf::UnitalClassFlags id_flags = scf::unital_class_check(scf::identity_superchannel(2));
  if (!(id_flags.identity_preserving && id_flags.doubly_stochastic && id_flags.unital_preserving)) {
    ok = false;
    detail += "identity superchannel flags wrong; ";
  }
  if (!scf::unital_class_check(scf::pauli_twirl_superchannel()).doubly_stochastic) {
    ok = false;
    detail += "Pauli twirl not DS; ";
  }

  if (!scf::is_extreme(scf::unitary_channel(scf::haar_unitary(2, rng)))) {
    ok = false;
    detail += "unitary channel not extreme; ";
  }
  if (scf::is_extreme(scf::completely_depolarizing_channel(2))) {
    ok = false;
    detail += "depolarizing channel extreme; ";
  }

  std::uniform_real_distribution<double> uniform(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 5; ++trial) {
    scf::GenExtremeSuperCircuit c;
    c.circuit_type = scf::SuperCircuitType::kTypeIII;
    c.angles.resize(static_cast<std::size_t>(scf::gen_extreme_super_param_count(c.circuit_type)));
    for (double& a : c.angles) a = uniform(rng);
    if (scf::operator_schmidt_rank(scf::super_choi(scf::gen_extreme_super(c)).matrix, 4, 4) != 1) {
      ok = false;
      detail += "type III not a product state; ";
    }
  }

  if (detail.empty()) detail = "comb validity, unital flags, extremality, product structure";
  const double secs = elapsed(start);
  report(6, "structural property suite", ok && secs < 60.0, detail, secs);
}

}  // namespace

int main() {
  criterion_rsw();
  criterion_duality();
  criterion_parameter_count();
  criterion_channel_decomposition();
  criterion_table();
  criterion_properties();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
