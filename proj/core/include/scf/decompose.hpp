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

#ifndef SCF_DECOMPOSE_HPP_
#define SCF_DECOMPOSE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scf/channels.hpp"
#include "scf/matrix.hpp"
#include "scf/superchannels.hpp"

namespace scf {

/// Parametrized families usable as mixture terms.
enum class AnsatzFamily {
  kGenExtremeChannel,  // rank <= 2 qubit channel, 4x4 Choi
  kSuperTypeI,         // gen-extreme superchannel circuits, 16x16 Choi
  kSuperTypeII,
  kSuperTypeIII,
  kSuperRank8,
};

int ansatz_param_count(AnsatzFamily family);

/// Choi state of one ansatz term at the given angles (4x4 or 16x16).
Matrix ansatz_choi(AnsatzFamily family, std::span<const double> angles);

/// Decomposition problem: minimize the trace distance between a target
/// Choi state and a mixture of ansatz terms. Weights are uniform unless
/// free_weights is set, in which case softmax logits (one per term) are
/// appended to the parameter vector.
struct DecompositionTask {
  Matrix target;
  std::vector<AnsatzFamily> terms;
  bool free_weights = false;
  long long budget = 50000;
  int restarts = 8;
  double tol = 1e-3;
};

int task_param_count(const DecompositionTask& task);

/// D_t(target, sum_i p_i omega_i(theta_i)); value in [0, 1].
double objective(const DecompositionTask& task, std::span<const double> params);

struct DecompositionResult {
  std::vector<double> best_angles;
  double best_distance = 1.0;
  long long evaluations_used = 0;
  // (global run index, final distance of that run), in schedule order
  std::vector<std::pair<int, double>> per_restart_trace;
  std::uint64_t seed = 0;
};

/// Multi-start local minimization: `restarts` searches seeded uniformly in
/// [0, 2pi)^P, followed by perturbation rounds around the incumbent
/// (Gaussian sigma 0.2 rad) and a final budget-draining polish. Results are
/// deterministic for a fixed seed regardless of worker count. workers = 0
/// means hardware concurrency capped by env SCF_NUM_WORKERS.
DecompositionResult multistart_minimize(const DecompositionTask& task,
                                        std::uint64_t seed, int workers = 0);

struct DecomposeOptions {
  long long budget = 0;  // 0 = family default
  int restarts = 8;
  double tol = 0.0;      // 0 = family default
  std::uint64_t seed = 0;
  int workers = 0;
};

/// Mixture of `terms` gen-extreme qubit channels fitted to the target.
DecompositionResult decompose_channel(const KrausChannel& target, int terms,
                                      const DecomposeOptions& opts = {});

/// The four superchannel decomposition tasks.
enum class TableTask { kSTo2R8, kSTo4G, kR8To2G, kR8To4G };

std::string table_task_name(TableTask t);
std::vector<AnsatzFamily> table_task_ansatz(TableTask t);
SuperchannelClass table_task_source(TableTask t);

DecompositionResult decompose_superchannel(const SuperChoi& target, TableTask task,
                                           const DecomposeOptions& opts = {});
DecompositionResult decompose_superchannel(const SuperChoi& target,
                                           std::vector<AnsatzFamily> ansatz,
                                           const DecomposeOptions& opts = {});

struct TableConfig {
  int instances = 10;
  long long budget = 500000;
  int restarts = 8;
  double tol = 5e-3;
  std::uint64_t seed = 1;
  int workers = 0;
  bool quiet = false;  // suppress per-instance progress lines on stderr
};

struct TableRow {
  TableTask task;
  int instance = 0;
  double distance = 1.0;
  long long evals = 0;
};

struct TableSummary {
  TableTask task;
  int param_count = 0;
  double median = 1.0;
  double min = 1.0;
  double max = 1.0;
  double success_fraction = 0.0;  // fraction of instances at or below tol
};

struct TableReport {
  TableConfig config;
  std::vector<TableRow> rows;
  std::vector<TableSummary> summaries;

  std::string to_csv() const;
  std::string to_markdown() const;
};

/// Runs all four decomposition tasks on seeded random instances.
TableReport run_table_tasks(const TableConfig& config);

}  // namespace scf

#endif  // SCF_DECOMPOSE_HPP_
