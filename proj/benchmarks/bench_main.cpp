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

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "scf/channels.hpp"
#include "scf/csd.hpp"
#include "scf/decompose.hpp"
#include "scf/matrix.hpp"
#include "scf/random.hpp"
#include "scf/superchannels.hpp"

namespace {

std::vector<double> random_angles(int count, scf::Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 2 * std::numbers::pi);
  std::vector<double> a(static_cast<std::size_t>(count));
  for (double& v : a) v = uniform(rng);
  return a;
}

void BM_haar_unitary8(benchmark::State& state) {
  scf::Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(scf::haar_unitary(8, rng));
}
BENCHMARK(BM_haar_unitary8);

void BM_partial_trace_16(benchmark::State& state) {
  scf::Rng rng(2);
  const scf::Matrix m = scf::random_density(16, rng);
  const scf::DimVector dims{2, 2, 2, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(scf::partial_trace(m, dims, std::vector<int>{2, 3}));
}
BENCHMARK(BM_partial_trace_16);

void BM_trace_distance_16(benchmark::State& state) {
  scf::Rng rng(3);
  const scf::Matrix a = scf::random_density(16, rng);
  const scf::Matrix b = scf::random_density(16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::trace_distance(a, b));
}
BENCHMARK(BM_trace_distance_16);

void BM_csd_u8(benchmark::State& state) {
  scf::Rng rng(4);
  const scf::Matrix u = scf::haar_unitary(8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::csd(u));
}
BENCHMARK(BM_csd_u8);

void BM_csd_unitary_3q(benchmark::State& state) {
  scf::Rng rng(5);
  const std::vector<double> angles = random_angles(scf::csd_param_count(8), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::csd_unitary(3, angles));
}
BENCHMARK(BM_csd_unitary_3q);

void BM_super_choi_type_i(benchmark::State& state) {
  scf::Rng rng(6);
  scf::GenExtremeSuperCircuit c;
  c.circuit_type = scf::SuperCircuitType::kTypeI;
  c.angles = random_angles(scf::gen_extreme_super_param_count(c.circuit_type), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::super_choi(scf::gen_extreme_super(c)));
}
BENCHMARK(BM_super_choi_type_i);

void BM_rsw_decompose(benchmark::State& state) {
  scf::Rng rng(7);
  const scf::KrausChannel ch = scf::random_kraus_channel(2, 2, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::rsw_decompose(ch));
}
BENCHMARK(BM_rsw_decompose);

void BM_objective_channel_two_terms(benchmark::State& state) {
  scf::Rng rng(8);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel, scf::AnsatzFamily::kGenExtremeChannel};
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 4, rng)).matrix;
  const std::vector<double> params = random_angles(scf::task_param_count(task), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::objective(task, params));
}
BENCHMARK(BM_objective_channel_two_terms);

void BM_objective_s_to_4g(benchmark::State& state) {
  scf::Rng rng(9);
  scf::DecompositionTask task;
  task.terms = scf::table_task_ansatz(scf::TableTask::kSTo4G);
  task.target =
      scf::super_choi(scf::random_superchannel(scf::SuperchannelClass::kFull, rng)).matrix;
  const std::vector<double> params = random_angles(scf::task_param_count(task), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::objective(task, params));
}
BENCHMARK(BM_objective_s_to_4g);

void BM_objective_s_to_2r8(benchmark::State& state) {
  scf::Rng rng(10);
  scf::DecompositionTask task;
  task.terms = scf::table_task_ansatz(scf::TableTask::kSTo2R8);
  task.target =
      scf::super_choi(scf::random_superchannel(scf::SuperchannelClass::kFull, rng)).matrix;
  const std::vector<double> params = random_angles(scf::task_param_count(task), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scf::objective(task, params));
}
BENCHMARK(BM_objective_s_to_2r8);

}  // namespace

BENCHMARK_MAIN();
