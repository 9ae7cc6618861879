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

#include "scf/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "scf/optim.hpp"
#include "scf/random.hpp"

namespace scf {

namespace {

// Local searches switch from simplex to quasi-Newton above this dimension.
constexpr int kSimplexDimLimit = 100;

int resolve_workers(int requested) {
  int workers = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("SCF_NUM_WORKERS")) {
    const int cap = std::atoi(env);
    if (cap > 0) workers = std::min(workers, cap);
  }
  return workers;
}

}  // namespace

int ansatz_param_count(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::kGenExtremeChannel:
      return GenExtremeQubitAnsatz::kParamCount;
    case AnsatzFamily::kSuperTypeI:
      return gen_extreme_super_param_count(SuperCircuitType::kTypeI);
    case AnsatzFamily::kSuperTypeII:
      return gen_extreme_super_param_count(SuperCircuitType::kTypeII);
    case AnsatzFamily::kSuperTypeIII:
      return gen_extreme_super_param_count(SuperCircuitType::kTypeIII);
    case AnsatzFamily::kSuperRank8:
      return rank8_param_count();
  }
  throw std::invalid_argument("unknown ansatz family");
}

Matrix ansatz_choi(AnsatzFamily family, std::span<const double> angles) {
  switch (family) {
    case AnsatzFamily::kGenExtremeChannel: {
      GenExtremeQubitAnsatz a;
      a.angles.assign(angles.begin(), angles.end());
      return choi_from_kraus(gen_extreme_channel(a)).matrix;
    }
    case AnsatzFamily::kSuperTypeI:
    case AnsatzFamily::kSuperTypeII:
    case AnsatzFamily::kSuperTypeIII: {
      GenExtremeSuperCircuit c;
      c.circuit_type = family == AnsatzFamily::kSuperTypeI    ? SuperCircuitType::kTypeI
                       : family == AnsatzFamily::kSuperTypeII ? SuperCircuitType::kTypeII
                                                              : SuperCircuitType::kTypeIII;
      c.angles.assign(angles.begin(), angles.end());
      return super_choi(gen_extreme_super(c)).matrix;
    }
    case AnsatzFamily::kSuperRank8:
      return super_choi(rank8_superchannel(angles)).matrix;
  }
  throw std::invalid_argument("unknown ansatz family");
}

int task_param_count(const DecompositionTask& task) {
  int count = 0;
  for (AnsatzFamily f : task.terms) count += ansatz_param_count(f);
  if (task.free_weights) count += static_cast<int>(task.terms.size());
  return count;
}

double objective(const DecompositionTask& task, std::span<const double> params) {
  if (task.terms.empty()) throw std::invalid_argument("objective: task has no ansatz terms");
  if (static_cast<int>(params.size()) != task_param_count(task))
    throw std::invalid_argument("objective: parameter vector length mismatch");

  const std::size_t n_terms = task.terms.size();
  std::vector<double> weights(n_terms, 1.0 / static_cast<double>(n_terms));
  if (task.free_weights) {
    const std::size_t base = params.size() - n_terms;
    double max_logit = params[base];
    for (std::size_t i = 1; i < n_terms; ++i)
      max_logit = std::max(max_logit, params[base + i]);
    double z = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i) {
      weights[i] = std::exp(params[base + i] - max_logit);
      z += weights[i];
    }
    for (double& w : weights) w /= z;
  }

  Matrix mixture;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const int p = ansatz_param_count(task.terms[i]);
    const Matrix term =
        ansatz_choi(task.terms[i], params.subspan(offset, static_cast<std::size_t>(p)));
    if (i == 0)
      mixture = weights[i] * term;
    else
      mixture += weights[i] * term;
    offset += static_cast<std::size_t>(p);
  }
  return trace_distance(task.target, mixture);
}

namespace {

struct RunSpec {
  int index = 0;
  std::vector<double> start;
  long long max_evals = 0;
};

LocalSearchResult run_local_search(const DecompositionTask& task, const RunSpec& spec,
                                   double init_step) {
  ObjectiveFn fn = [&task](const std::vector<double>& x) {
    return objective(task, std::span<const double>(x));
  };
  if (static_cast<int>(spec.start.size()) <= kSimplexDimLimit) {
    NelderMeadOptions opts;
    opts.max_evals = spec.max_evals;
    opts.target = task.tol;
    opts.init_step = init_step;
    return nelder_mead_minimize(fn, spec.start, opts);
  }
  LbfgsOptions opts;
  opts.max_evals = spec.max_evals;
  opts.target = task.tol;
  return lbfgs_minimize(fn, spec.start, opts);
}

// Runs one batch of independent searches, at most `workers` at a time.
std::vector<LocalSearchResult> run_round(const DecompositionTask& task,
                                         const std::vector<RunSpec>& specs,
                                         double init_step, int workers) {
  std::vector<LocalSearchResult> results(specs.size());
  if (workers <= 1 || specs.size() <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i)
      results[i] = run_local_search(task, specs[i], init_step);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      results[i] = run_local_search(task, specs[i], init_step);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(workers, static_cast<int>(specs.size()));
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace

DecompositionResult multistart_minimize(const DecompositionTask& task,
                                        std::uint64_t seed, int workers) {
  if (task.budget < 1) throw std::invalid_argument("multistart_minimize: budget must be positive");
  if (task.restarts < 1)
    throw std::invalid_argument("multistart_minimize: need at least one restart");
  const int dim = task_param_count(task);
  const int refine_rounds = 4;
  const int refine_width = std::max(2, task.restarts / 2);
  const int n_workers = resolve_workers(workers);

  DecompositionResult result;
  result.seed = seed;
  result.best_distance = std::numeric_limits<double>::infinity();

  long long used = 0;
  int global_run = 0;

  auto consume_round = [&](const std::vector<RunSpec>& specs, double init_step) {
    const std::vector<LocalSearchResult> outs = run_round(task, specs, init_step, n_workers);
    for (const LocalSearchResult& r : outs) {
      used += r.evals;
      result.per_restart_trace.emplace_back(global_run++, r.f);
      if (r.f < result.best_distance) {
        result.best_distance = r.f;
        result.best_angles = r.x;
      }
    }
  };

  // initial restarts: uniform angles in [0, 2pi)
  {
    std::vector<RunSpec> specs(static_cast<std::size_t>(task.restarts));
    const long long planned =
        static_cast<long long>(task.restarts) + refine_rounds * refine_width;
    for (int i = 0; i < task.restarts; ++i) {
      RunSpec& s = specs[static_cast<std::size_t>(i)];
      s.index = i;
      s.max_evals = std::max<long long>(1, task.budget / planned);
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
      s.start.resize(static_cast<std::size_t>(dim));
      for (double& v : s.start) v = uniform(rng);
    }
    consume_round(specs, 0.5);
  }

  // perturbation rounds around the incumbent
  for (int round = 0; round < refine_rounds; ++round) {
    if (result.best_distance <= task.tol || used >= task.budget) break;
    const int remaining_rounds = refine_rounds - round;
    const long long remaining = task.budget - used;
    const long long per_run =
        std::max<long long>(1, remaining / (static_cast<long long>(remaining_rounds) * refine_width));
    std::vector<RunSpec> specs(static_cast<std::size_t>(refine_width));
    for (int i = 0; i < refine_width; ++i) {
      RunSpec& s = specs[static_cast<std::size_t>(i)];
      s.index = global_run + i;
      s.max_evals = per_run;
      s.start = result.best_angles;
      if (i > 0) {
        Rng rng(derive_seed(seed, 0x1000u + static_cast<std::uint64_t>(s.index)));
        std::normal_distribution<double> gauss(0.0, 0.2);
        for (double& v : s.start) v += gauss(rng);
      }
    }
    consume_round(specs, 0.2);
  }

  // polish: drain whatever budget is left from the incumbent
  if (result.best_distance > task.tol && task.budget - used > dim) {
    std::vector<RunSpec> specs(1);
    specs[0].index = global_run;
    specs[0].max_evals = task.budget - used;
    specs[0].start = result.best_angles;
    consume_round(specs, 0.05);
  }

  result.evaluations_used = used;
  if (!result.best_angles.empty())
    result.best_distance = objective(task, std::span<const double>(result.best_angles));
  return result;
}

DecompositionResult decompose_channel(const KrausChannel& target, int terms,
                                      const DecomposeOptions& opts) {
  if (terms < 1) throw std::invalid_argument("decompose_channel: need at least one term");
  if (target.d_in != 2 || target.d_out != 2)
    throw std::invalid_argument("decompose_channel: only qubit channels are supported");
  DecompositionTask task;
  task.target = choi_from_kraus(target).matrix;
  task.terms.assign(static_cast<std::size_t>(terms), AnsatzFamily::kGenExtremeChannel);
  task.budget = opts.budget > 0 ? opts.budget : 50000;
  task.restarts = opts.restarts;
  task.tol = opts.tol > 0.0 ? opts.tol : 1e-3;
  return multistart_minimize(task, opts.seed, opts.workers);
}

std::string table_task_name(TableTask t) {
  switch (t) {
    case TableTask::kSTo2R8:
      return "S_to_2r8";
    case TableTask::kSTo4G:
      return "S_to_4g";
    case TableTask::kR8To2G:
      return "r8_to_2g";
    case TableTask::kR8To4G:
      return "r8_to_4g";
  }
  throw std::invalid_argument("unknown table task");
}

std::vector<AnsatzFamily> table_task_ansatz(TableTask t) {
  switch (t) {
    case TableTask::kSTo2R8:
      return {AnsatzFamily::kSuperRank8, AnsatzFamily::kSuperRank8};
    case TableTask::kSTo4G:
      return std::vector<AnsatzFamily>(4, AnsatzFamily::kSuperTypeI);
    case TableTask::kR8To2G:
      return std::vector<AnsatzFamily>(2, AnsatzFamily::kSuperTypeI);
    case TableTask::kR8To4G:
      return std::vector<AnsatzFamily>(4, AnsatzFamily::kSuperTypeI);
  }
  throw std::invalid_argument("unknown table task");
}

SuperchannelClass table_task_source(TableTask t) {
  switch (t) {
    case TableTask::kSTo2R8:
    case TableTask::kSTo4G:
      return SuperchannelClass::kFull;
    case TableTask::kR8To2G:
    case TableTask::kR8To4G:
      return SuperchannelClass::kRank8;
  }
  throw std::invalid_argument("unknown table task");
}

DecompositionResult decompose_superchannel(const SuperChoi& target,
                                           std::vector<AnsatzFamily> ansatz,
                                           const DecomposeOptions& opts) {
  if (target.d != 2)
    throw std::invalid_argument("decompose_superchannel: only qubit superchannels are supported");
  DecompositionTask task;
  task.target = target.matrix;
  task.terms = std::move(ansatz);
  task.budget = opts.budget > 0 ? opts.budget : 500000;
  task.restarts = opts.restarts;
  task.tol = opts.tol > 0.0 ? opts.tol : 5e-3;
  return multistart_minimize(task, opts.seed, opts.workers);
}

DecompositionResult decompose_superchannel(const SuperChoi& target, TableTask task,
                                           const DecomposeOptions& opts) {
  return decompose_superchannel(target, table_task_ansatz(task), opts);
}

std::string TableReport::to_csv() const {
  std::ostringstream out;
  out << "instance,task,distance,evals\n";
  out.precision(12);
  for (const TableRow& row : rows)
    out << row.instance << ',' << table_task_name(row.task) << ',' << row.distance
        << ',' << row.evals << '\n';
  return out.str();
}

std::string TableReport::to_markdown() const {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific;
  out << "| Decomposition | Parameters | Median distance | Min | Max | <= "
      << config.tol << " |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const TableSummary& s : summaries) {
    out << "| " << table_task_name(s.task) << " | " << s.param_count << " | "
        << s.median << " | " << s.min << " | " << s.max << " | ";
    out.precision(2);
    out << std::fixed << s.success_fraction << std::scientific;
    out.precision(3);
    out << " |\n";
  }
  return out.str();
}

TableReport run_table_tasks(const TableConfig& config) {
  if (config.instances < 1)
    throw std::invalid_argument("run_table_tasks: need at least one instance");
  const TableTask tasks[] = {TableTask::kSTo2R8, TableTask::kSTo4G,
                             TableTask::kR8To2G, TableTask::kR8To4G};
  TableReport report;
  report.config = config;

  for (int ti = 0; ti < 4; ++ti) {
    const TableTask t = tasks[ti];
    std::vector<double> distances;
    for (int inst = 0; inst < config.instances; ++inst) {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(ti) * 1000003ULL +
                                           static_cast<std::uint64_t>(inst)));
      const Superchannel sc = random_superchannel(table_task_source(t), rng);
      const SuperChoi target = super_choi(sc);

      DecomposeOptions opts;
      opts.budget = config.budget;
      opts.restarts = config.restarts;
      opts.tol = config.tol;
      opts.seed = derive_seed(config.seed, 0xabcd0000ULL + static_cast<std::uint64_t>(ti) * 100ULL +
                                               static_cast<std::uint64_t>(inst));
      opts.workers = config.workers;
      const DecompositionResult r = decompose_superchannel(target, t, opts);

      TableRow row;
      row.task = t;
      row.instance = inst;
      row.distance = r.best_distance;
      row.evals = r.evaluations_used;
      report.rows.push_back(row);
      distances.push_back(r.best_distance);
      if (!config.quiet)
        std::cerr << table_task_name(t) << " instance " << inst
                  << ": distance " << r.best_distance << " (" << r.evaluations_used
                  << " evals)\n";
    }

    std::vector<double> sorted = distances;
    std::sort(sorted.begin(), sorted.end());
    TableSummary s;
    s.task = t;
    {
      DecompositionTask probe;
      probe.target = Matrix::Identity(16, 16) / 16.0;
      probe.terms = table_task_ansatz(t);
      s.param_count = task_param_count(probe);
    }
    const std::size_t n = sorted.size();
    s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    s.min = sorted.front();
    s.max = sorted.back();
    int ok = 0;
    for (double d : sorted)
      if (d <= config.tol) ++ok;
    s.success_fraction = static_cast<double>(ok) / static_cast<double>(n);
    report.summaries.push_back(s);
  }
  return report;
}

}  // namespace scf
