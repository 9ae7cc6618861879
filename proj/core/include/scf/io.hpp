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

#ifndef SCF_IO_HPP_
#define SCF_IO_HPP_

#include <stdexcept>
#include <string>

#include "scf/channels.hpp"
#include "scf/decompose.hpp"
#include "scf/superchannels.hpp"

namespace scf {

/// Raised on malformed files; the message carries file, line and cause.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance files are self-describing JSON with a "kind" discriminator:
///   channel      {"kind":"channel","d_in":..,"d_out":..,"kraus":[matrix,..]}
///   choi         {"kind":"choi","d_in":..,"d_out":..,"choi":matrix}
///   superchannel {"kind":"superchannel","d":..,"class":..,"V":matrix,
///                 "W":matrix,"anc_dims":[a1,a2]}
/// where matrix is {"rows":n,"cols":m,"entries":[[re,im],..]} row-major.
struct LoadedInstance {
  enum class Kind { kChannel, kChoi, kSuperchannel };
  Kind kind = Kind::kChannel;
  KrausChannel channel;
  ChoiState choi;
  Superchannel superchannel;
  std::string superchannel_class;  // "full", "rank8", "gen_extreme" or "custom"
};

LoadedInstance load_instance(const std::string& path);

void save_channel(const std::string& path, const KrausChannel& ch);
void save_choi(const std::string& path, const ChoiState& w);
void save_superchannel(const std::string& path, const Superchannel& sc,
                       const std::string& cls);

/// Matrix literal extended with a "space_order" field.
void save_super_choi(const std::string& path, const SuperChoi& w);

void save_result(const std::string& path, const DecompositionResult& result);

/// Batch-run configuration file:
/// {"task":"S_to_4g|S_to_2r8|r8_to_2g|r8_to_4g|channel",
///  "seed":..,"restarts":..,"budget":..,"tol":..}
struct TaskFileConfig {
  std::string task;
  std::uint64_t seed = 0;
  int restarts = 8;
  long long budget = 0;
  double tol = 0.0;
};

TaskFileConfig load_task_file(const std::string& path);

/// Atomically write `content` (temp file + rename).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace scf

#endif  // SCF_IO_HPP_
