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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scf/channels.hpp"
#include "scf/decompose.hpp"
#include "scf/io.hpp"
#include "scf/superchannels.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitMalformedInput = 2;
constexpr int kExitBudgetExhausted = 3;

scf::SuperchannelClass parse_class(const std::string& name) {
  if (name == "full") return scf::SuperchannelClass::kFull;
  if (name == "rank8") return scf::SuperchannelClass::kRank8;
  if (name == "gen_extreme") return scf::SuperchannelClass::kGenExtreme;
  throw CLI::ValidationError("--class", "unknown superchannel class: " + name);
}

std::optional<scf::TableTask> parse_table_task(const std::string& name) {
  if (name == "S_to_2r8") return scf::TableTask::kSTo2R8;
  if (name == "S_to_4g") return scf::TableTask::kSTo4G;
  if (name == "r8_to_2g") return scf::TableTask::kR8To2G;
  if (name == "r8_to_4g") return scf::TableTask::kR8To4G;
  return std::nullopt;
}

int cmd_generate(const std::string& kind, const std::string& cls, int d, int rank,
                 std::uint64_t seed, const std::string& out) {
  scf::Rng rng(seed);
  if (kind == "channel") {
    const scf::KrausChannel ch = scf::random_kraus_channel(d, d, rank, rng);
    scf::save_channel(out, ch);
    std::cout << "channel d=" << d << " rank=" << scf::kraus_rank(ch)
              << " completeness_residual=" << scf::completeness_residual(ch) << "\n";
    std::cout << "wrote " << out << "\n";
    return kExitOk;
  }
  if (kind == "superchannel") {
    const scf::Superchannel sc = scf::random_superchannel(parse_class(cls), rng);
    scf::save_superchannel(out, sc, cls);
    const scf::SuperChoi w = scf::super_choi(sc);
    std::cout << "superchannel class=" << cls << " rank=" << scf::super_choi_rank(w)
              << " comb_valid=" << (scf::comb_validity(w) ? "yes" : "no") << "\n";
    std::cout << "wrote " << out << "\n";
    return kExitOk;
  }
  std::cerr << "unknown kind: " << kind << " (expected channel|superchannel)\n";
  return kExitMalformedInput;
}

int validate_channel(const scf::KrausChannel& ch) {
  const double residual = scf::completeness_residual(ch);
  if (residual > scf::tolerance()) {
    std::cout << "CPTP FAILED, completeness residual " << residual << "\n";
    return kExitValidationFailure;
  }
  const scf::KrausChannel canon = scf::canonicalize(ch);
  std::cout << "CPTP ok, rank " << canon.kraus.size();
  std::cout << (scf::is_extreme(ch) ? ", extreme" : ", not extreme");
  std::cout << (scf::is_gen_extreme(ch) ? ", gen-extreme" : ", not gen-extreme");
  if (ch.d_in == ch.d_out)
    std::cout << (scf::is_unital(ch) ? ", unital" : ", not unital");
  std::cout << "\n";
  const auto [image, gram] = scf::nonunitality_witnesses(ch);
  std::cout << "E(I) deviation from I: "
            << scf::max_abs(image - scf::Matrix::Identity(ch.d_out, ch.d_out))
            << ", sigma trace " << gram.trace().real() << ", sigma rank "
            << scf::psd_rank(gram) << "\n";
  return kExitOk;
}

int validate_superchannel(const scf::Superchannel& sc) {
  if (!scf::is_valid_superchannel(sc)) {
    std::cout << "superchannel FAILED: pre/post not unitary or dims inconsistent\n";
    return kExitValidationFailure;
  }
  const scf::SuperKraus sk = scf::super_kraus(sc);
  const double residual = scf::super_completeness_residual(sk);
  if (residual > scf::tolerance()) {
    std::cout << "completeness FAILED, residual " << residual << "\n";
    return kExitValidationFailure;
  }
  const scf::SuperChoi w = scf::super_choi(sc);
  std::cout << (scf::comb_validity(w) ? "comb ok" : "comb FAILED") << ", rank "
            << scf::super_choi_rank(w) << "\n";
  std::cout << "extremality necessary condition: "
            << (scf::super_extreme_necessary(sk) ? "satisfied" : "not satisfied") << "\n";
  const scf::UnitalClassFlags flags = scf::unital_class_check(sc);
  std::cout << "IP=" << (flags.identity_preserving ? "yes" : "no")
            << " DS=" << (flags.doubly_stochastic ? "yes" : "no")
            << " UP=" << (flags.unital_preserving ? "yes" : "no") << "\n";
  return scf::comb_validity(w) ? kExitOk : kExitValidationFailure;
}

int cmd_validate(const std::string& path) {
  const scf::LoadedInstance inst = scf::load_instance(path);
  switch (inst.kind) {
    case scf::LoadedInstance::Kind::kChannel:
      return validate_channel(inst.channel);
    case scf::LoadedInstance::Kind::kChoi: {
      if (!scf::is_valid_choi(inst.choi)) {
        std::cout << "Choi FAILED: not PSD trace-preserving\n";
        return kExitValidationFailure;
      }
      std::cout << "Choi ok, rank " << scf::psd_rank(inst.choi.matrix) << "\n";
      return kExitOk;
    }
    case scf::LoadedInstance::Kind::kSuperchannel:
      return validate_superchannel(inst.superchannel);
  }
  return kExitMalformedInput;
}

void print_dry_run(const std::vector<scf::AnsatzFamily>& terms) {
  int total = 0;
  std::cout << "terms:";
  for (scf::AnsatzFamily f : terms) {
    const int p = scf::ansatz_param_count(f);
    std::cout << " " << p;
    total += p;
  }
  std::cout << "\ntotal parameters: " << total << "\n";
}

int cmd_decompose(const std::string& path, std::string task_name, int terms,
                  const scf::DecomposeOptions& opts, const std::string& out,
                  bool dry_run) {
  const scf::LoadedInstance inst = scf::load_instance(path);
  scf::DecompositionResult result;
  double tol_used = 0.0;

  if (inst.kind == scf::LoadedInstance::Kind::kChannel || task_name == "channel") {
    if (inst.kind != scf::LoadedInstance::Kind::kChannel) {
      std::cerr << "task 'channel' requires a channel instance\n";
      return kExitValidationFailure;
    }
    if (dry_run) {
      print_dry_run(std::vector<scf::AnsatzFamily>(
          static_cast<std::size_t>(terms), scf::AnsatzFamily::kGenExtremeChannel));
      return kExitOk;
    }
    tol_used = opts.tol > 0.0 ? opts.tol : 1e-3;
    result = scf::decompose_channel(inst.channel, terms, opts);
  } else {
    scf::SuperChoi target;
    if (inst.kind == scf::LoadedInstance::Kind::kSuperchannel) {
      target = scf::super_choi(inst.superchannel);
    } else {
      if (inst.choi.d_in != 4 || inst.choi.d_out != 4) {
        std::cerr << "choi instance must live on the doubled qubit space (16x16)\n";
        return kExitValidationFailure;
      }
      scf::SuperChoi w;
      w.d = 2;
      w.matrix = scf::as_channel_choi(scf::SuperChoi{inst.choi.matrix, 2}).matrix;
      target = w;
    }
    if (task_name.empty()) task_name = "S_to_4g";
    const auto task = parse_table_task(task_name);
    if (!task) {
      std::cerr << "unknown task: " << task_name << "\n";
      return kExitMalformedInput;
    }
    if ((*task == scf::TableTask::kR8To2G || *task == scf::TableTask::kR8To4G) &&
        scf::super_choi_rank(target) > 8) {
      std::cerr << "task " << task_name << " expects a rank-8 instance, got rank "
                << scf::super_choi_rank(target) << "\n";
      return kExitValidationFailure;
    }
    if (dry_run) {
      print_dry_run(scf::table_task_ansatz(*task));
      return kExitOk;
    }
    tol_used = opts.tol > 0.0 ? opts.tol : 5e-3;
    result = scf::decompose_superchannel(target, *task, opts);
  }

  if (!out.empty()) {
    scf::save_result(out, result);
    std::cout << "wrote " << out << "\n";
  }
  std::cout << "best distance: " << result.best_distance << " ("
            << result.evaluations_used << " evaluations)\n";
  return result.best_distance <= tol_used ? kExitOk : kExitBudgetExhausted;
}

int cmd_table1(const scf::TableConfig& cfg, const std::string& format,
               const std::string& out_prefix) {
  const scf::TableReport report = scf::run_table_tasks(cfg);
  const std::string csv = report.to_csv();
  const std::string md = report.to_markdown();
  if (!out_prefix.empty()) {
    scf::write_text_file(out_prefix + ".csv", csv);
    scf::write_text_file(out_prefix + ".md", md);
    std::cerr << "wrote " << out_prefix << ".csv and " << out_prefix << ".md\n";
  }
  if (format == "csv")
    std::cout << csv;
  else
    std::cout << md;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum channel and superchannel decomposition toolkit"};
  app.require_subcommand(1);

  // generate
  std::string gen_kind, gen_class = "full", gen_out = "instance.json";
  int gen_d = 2, gen_rank = 4;
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("generate", "generate a random instance file");
  gen->add_option("kind", gen_kind, "channel|superchannel")->required();
  gen->add_option("--class", gen_class, "full|rank8|gen_extreme (superchannels)");
  gen->add_option("--d", gen_d, "system dimension (channels)");
  gen->add_option("--rank", gen_rank, "Kraus rank (channels)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output path");

  // validate
  std::string val_path;
  CLI::App* val = app.add_subcommand("validate", "validate an instance file");
  val->add_option("path", val_path, "instance file")->required();

  // decompose
  std::string dec_path, dec_task, dec_out;
  int dec_terms = 2;
  bool dec_dry = false;
  scf::DecomposeOptions dec_opts;
  CLI::App* dec = app.add_subcommand("decompose", "convex-decompose an instance");
  dec->add_option("path", dec_path, "instance file")->required();
  dec->add_option("--task", dec_task, "S_to_2r8|S_to_4g|r8_to_2g|r8_to_4g|channel");
  dec->add_option("--terms", dec_terms, "mixture terms for channel targets");
  dec->add_option("--seed", dec_opts.seed, "RNG seed");
  dec->add_option("--budget", dec_opts.budget, "objective evaluation budget");
  dec->add_option("--restarts", dec_opts.restarts, "initial restarts");
  dec->add_option("--tol", dec_opts.tol, "target trace distance");
  dec->add_option("--out", dec_out, "result JSON path");
  dec->add_flag("--dry-run", dec_dry, "report parameter counts only");
  std::string dec_task_file;
  dec->add_option("--task-file", dec_task_file, "JSON task configuration file");

  // table1
  scf::TableConfig tbl_cfg;
  std::string tbl_format = "markdown", tbl_out = "table1";
  CLI::App* tbl = app.add_subcommand("table1", "run the four decomposition tasks");
  tbl->add_option("--instances", tbl_cfg.instances, "instances per task");
  tbl->add_option("--budget", tbl_cfg.budget, "objective evaluation budget per instance");
  tbl->add_option("--restarts", tbl_cfg.restarts, "initial restarts");
  tbl->add_option("--tol", tbl_cfg.tol, "success threshold");
  tbl->add_option("--seed", tbl_cfg.seed, "master seed");
  tbl->add_option("--format", tbl_format, "markdown|csv (stdout format)");
  tbl->add_option("--out", tbl_out, "output file prefix ('' to skip files)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_kind, gen_class, gen_d, gen_rank, gen_seed, gen_out);
    if (val->parsed()) return cmd_validate(val_path);
    if (dec->parsed()) {
      if (!dec_task_file.empty()) {
        const scf::TaskFileConfig cfg = scf::load_task_file(dec_task_file);
        if (dec_task.empty()) dec_task = cfg.task;
        if (dec_opts.seed == 0) dec_opts.seed = cfg.seed;
        if (dec_opts.budget == 0) dec_opts.budget = cfg.budget;
        if (dec_opts.tol == 0.0) dec_opts.tol = cfg.tol;
        dec_opts.restarts = cfg.restarts;
      }
      return cmd_decompose(dec_path, dec_task, dec_terms, dec_opts, dec_out, dec_dry);
    }
    if (tbl->parsed()) return cmd_table1(tbl_cfg, tbl_format, tbl_out);
  } catch (const scf::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}
