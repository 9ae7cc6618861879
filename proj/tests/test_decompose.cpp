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
#include <numbers>
#include <vector>

#include "scf/channels.hpp"
#include "scf/decompose.hpp"
#include "scf/matrix.hpp"
#include "scf/random.hpp"

using scf::Matrix;

namespace {

std::vector<double> random_params(int count, scf::Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 2 * std::numbers::pi);
  std::vector<double> p(static_cast<std::size_t>(count));
  for (double& v : p) v = uniform(rng);
  return p;
}

}  // namespace

TEST_CASE("objective vanishes when the target is the ansatz itself") {
  scf::Rng rng(7);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  const std::vector<double> params = random_params(task_param_count(task), rng);
  task.target = scf::ansatz_choi(scf::AnsatzFamily::kGenExtremeChannel, params);
  CHECK(scf::objective(task, params) < 1e-13);
}

TEST_CASE("objective vanishes for the identity target at zero angles") {
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  task.target = scf::choi_from_kraus(scf::identity_channel(2)).matrix;
  const std::vector<double> zeros(static_cast<std::size_t>(task_param_count(task)), 0.0);
  CHECK(scf::objective(task, zeros) < 1e-14);
}

TEST_CASE("objective equals an independent eigenvalue recomputation") {
  scf::Rng rng(17);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel, scf::AnsatzFamily::kGenExtremeChannel};
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 4, rng)).matrix;
  const std::vector<double> params = random_params(task_param_count(task), rng);
  const double value = scf::objective(task, params);
  CHECK(value > 0.0);
  CHECK(value <= 1.0);

  const int p = scf::ansatz_param_count(scf::AnsatzFamily::kGenExtremeChannel);
  const std::span<const double> view(params);
  const Matrix mixture =
      0.5 * scf::ansatz_choi(task.terms[0], view.subspan(0, p)) +
      0.5 * scf::ansatz_choi(task.terms[1], view.subspan(p, p));
  Eigen::SelfAdjointEigenSolver<Matrix> es(task.target - mixture, Eigen::EigenvaluesOnly);
  CHECK(value == doctest::Approx(0.5 * es.eigenvalues().cwiseAbs().sum()).epsilon(1e-12));
}

TEST_CASE("objective rejects a wrong parameter length") {
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  task.target = Matrix::Identity(4, 4) / 4;
  const std::vector<double> wrong(5, 0.0);
  CHECK_THROWS_AS(scf::objective(task, wrong), std::invalid_argument);
}

TEST_CASE("objective is invariant under permuting identical ansatz blocks") {
  scf::Rng rng(19);
  scf::DecompositionTask task;
  task.terms.assign(3, scf::AnsatzFamily::kGenExtremeChannel);
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 4, rng)).matrix;
  std::vector<double> params = random_params(task_param_count(task), rng);
  const double base = scf::objective(task, params);

  const int p = scf::ansatz_param_count(scf::AnsatzFamily::kGenExtremeChannel);
  std::vector<double> permuted(params.size());
  // rotate blocks: (0,1,2) -> (2,0,1)
  for (int i = 0; i < p; ++i) {
    permuted[static_cast<std::size_t>(i)] = params[static_cast<std::size_t>(2 * p + i)];
    permuted[static_cast<std::size_t>(p + i)] = params[static_cast<std::size_t>(i)];
    permuted[static_cast<std::size_t>(2 * p + i)] = params[static_cast<std::size_t>(p + i)];
  }
  CHECK(std::abs(scf::objective(task, permuted) - base) <= 1e-15);
}

TEST_CASE("objective is empirically smooth at random points") {
  scf::Rng rng(23);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 4, rng)).matrix;
  std::vector<double> params = random_params(task_param_count(task), rng);

  const double h = 1e-5;
  int checked = 0;
  for (int i = 0; i < 6; ++i) {
    const double xi = params[static_cast<std::size_t>(i)];
    auto eval_at = [&](double v) {
      params[static_cast<std::size_t>(i)] = v;
      const double f = scf::objective(task, params);
      params[static_cast<std::size_t>(i)] = xi;
      return f;
    };
    const double f0 = eval_at(xi);
    const double forward = (eval_at(xi + h) - f0) / h;
    const double central = (eval_at(xi + h) - eval_at(xi - h)) / (2 * h);
    if (std::abs(central) < 1e-6) continue;  // skip near-stationary directions
    CHECK(std::abs(forward - central) / std::abs(central) < 1e-3);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("multistart_minimize is deterministic and internally consistent") {
  scf::Rng rng(29);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 2, rng)).matrix;
  task.budget = 4000;
  task.restarts = 3;
  task.tol = 1e-6;

  const scf::DecompositionResult a = scf::multistart_minimize(task, 11, 1);
  const scf::DecompositionResult b = scf::multistart_minimize(task, 11, 2);
  CHECK(a.best_distance == b.best_distance);
  CHECK(a.evaluations_used == b.evaluations_used);
  CHECK(a.best_angles == b.best_angles);
  CHECK(a.per_restart_trace == b.per_restart_trace);

  // recomputed objective matches the reported distance
  CHECK(std::abs(scf::objective(task, a.best_angles) - a.best_distance) <= 1e-12);
  CHECK(a.evaluations_used <= task.budget);

  // incumbent sequence (prefix minima over the trace) is non-increasing
  double incumbent = std::numeric_limits<double>::infinity();
  for (const auto& [run, dist] : a.per_restart_trace) {
    const double next = std::min(incumbent, dist);
    CHECK(next <= incumbent);
    incumbent = next;
  }
  CHECK(incumbent == doctest::Approx(a.best_distance).epsilon(1e-12));
}

TEST_CASE("multistart_minimize rejects degenerate configs") {
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel};
  task.target = Matrix::Identity(4, 4) / 4;
  task.restarts = 0;
  CHECK_THROWS_AS(scf::multistart_minimize(task, 1), std::invalid_argument);
  task.restarts = 1;
  task.budget = 0;
  CHECK_THROWS_AS(scf::multistart_minimize(task, 1), std::invalid_argument);
}

TEST_CASE("decompose_channel recovers a unitary target with one term") {
  scf::Rng rng(31);
  const scf::KrausChannel target = scf::unitary_channel(scf::haar_unitary(2, rng));
  scf::DecomposeOptions opts;
  opts.budget = 20000;
  opts.tol = 1e-6;
  opts.seed = 5;
  const scf::DecompositionResult r = scf::decompose_channel(target, 1, opts);
  CHECK(r.best_distance <= 1e-6);
}

TEST_CASE("decompose_channel reaches the RSW bound on a random channel") {
  scf::Rng rng(37);
  const scf::KrausChannel target = scf::random_kraus_channel(2, 2, 4, rng);
  scf::DecomposeOptions opts;
  opts.seed = 9;
  const scf::DecompositionResult r = scf::decompose_channel(target, 2, opts);
  CHECK(r.best_distance <= 1e-3);

  // the exact construction is the oracle lower bound
  const auto [g1, g2] = scf::rsw_decompose(target);
  const Matrix exact = 0.5 * (scf::choi_from_kraus(g1).matrix + scf::choi_from_kraus(g2).matrix);
  const double exact_distance =
      scf::trace_distance(exact, scf::choi_from_kraus(target).matrix);
  CHECK(exact_distance < 1e-10);
  CHECK(r.best_distance >= exact_distance);
  CHECK_THROWS_AS(scf::decompose_channel(target, 0, opts), std::invalid_argument);
}

TEST_CASE("free mixing weights are accepted") {
  scf::Rng rng(41);
  scf::DecompositionTask task;
  task.terms = {scf::AnsatzFamily::kGenExtremeChannel, scf::AnsatzFamily::kGenExtremeChannel};
  task.free_weights = true;
  task.target = scf::choi_from_kraus(scf::random_kraus_channel(2, 2, 3, rng)).matrix;
  CHECK(task_param_count(task) == 2 * scf::ansatz_param_count(scf::AnsatzFamily::kGenExtremeChannel) + 2);
  const std::vector<double> params = random_params(task_param_count(task), rng);
  const double value = scf::objective(task, params);
  CHECK(value >= 0.0);
  CHECK(value <= 1.0);
}

TEST_CASE("table task metadata") {
  CHECK(scf::table_task_name(scf::TableTask::kSTo2R8) == "S_to_2r8");
  CHECK(scf::table_task_name(scf::TableTask::kSTo4G) == "S_to_4g");
  CHECK(scf::table_task_name(scf::TableTask::kR8To2G) == "r8_to_2g");
  CHECK(scf::table_task_name(scf::TableTask::kR8To4G) == "r8_to_4g");
  CHECK(scf::table_task_ansatz(scf::TableTask::kSTo4G).size() == 4);
  CHECK(scf::table_task_ansatz(scf::TableTask::kSTo2R8).size() == 2);
  CHECK(scf::table_task_source(scf::TableTask::kR8To4G) == scf::SuperchannelClass::kRank8);

  // parameter totals of the mixtures
  int s_to_4g = 0;
  for (const auto f : scf::table_task_ansatz(scf::TableTask::kSTo4G))
    s_to_4g += scf::ansatz_param_count(f);
  CHECK(s_to_4g == 608);
  int s_to_2r8 = 0;
  for (const auto f : scf::table_task_ansatz(scf::TableTask::kSTo2R8))
    s_to_2r8 += scf::ansatz_param_count(f);
  CHECK(s_to_2r8 == 776);
}

TEST_CASE("run_table_tasks smoke run is deterministic") {
  scf::TableConfig cfg;
  cfg.instances = 1;
  cfg.budget = 600;
  cfg.restarts = 2;
  cfg.seed = 3;
  cfg.quiet = true;
  const scf::TableReport a = scf::run_table_tasks(cfg);
  CHECK(a.rows.size() == 4);
  CHECK(a.summaries.size() == 4);
  for (const scf::TableRow& row : a.rows) {
    CHECK(row.distance >= 0.0);
    CHECK(row.distance <= 1.0);
  }
  const scf::TableReport b = scf::run_table_tasks(cfg);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_markdown() == b.to_markdown());

  // csv has one line per instance-task plus a header
  const std::string csv = a.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
