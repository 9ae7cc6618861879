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

#include "scf/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace scf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw IoError(path + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse(const std::string& path, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(path, "parse error at line " + std::to_string(line_of_offset(text, e.byte)) +
                   ": " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const std::string& path, const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail(path, "matrix literal needs rows, cols and entries");
  const long rows = j["rows"].get<long>();
  const long cols = j["cols"].get<long>();
  if (rows < 1 || cols < 1) fail(path, "matrix dimensions must be positive");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
    fail(path, "entries length must equal rows * cols");
  Matrix m(rows, cols);
  long idx = 0;
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c, ++idx) {
      const json& e = entries[static_cast<std::size_t>(idx)];
      if (!e.is_array() || e.size() != 2) fail(path, "each entry must be a [re, im] pair");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

void write_json(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

template <typename T>
T field(const std::string& path, const json& j, const char* name) {
  if (!j.contains(name)) fail(path, std::string("missing field \"") + name + "\"");
  try {
    return j[name].get<T>();
  } catch (const json::exception& e) {
    fail(path, std::string("bad field \"") + name + "\": " + e.what());
  }
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open file for writing");
    out << content;
    if (!out) fail(path, "write failed");
  }
  std::filesystem::rename(tmp, path);
}

void save_channel(const std::string& path, const KrausChannel& ch) {
  json kraus = json::array();
  for (const Matrix& k : ch.kraus) kraus.push_back(matrix_to_json(k));
  write_json(path, json{{"kind", "channel"},
                        {"d_in", ch.d_in},
                        {"d_out", ch.d_out},
                        {"kraus", std::move(kraus)}});
}

void save_choi(const std::string& path, const ChoiState& w) {
  write_json(path, json{{"kind", "choi"},
                        {"d_in", w.d_in},
                        {"d_out", w.d_out},
                        {"choi", matrix_to_json(w.matrix)}});
}

void save_superchannel(const std::string& path, const Superchannel& sc,
                       const std::string& cls) {
  write_json(path, json{{"kind", "superchannel"},
                        {"d", sc.d},
                        {"class", cls},
                        {"V", matrix_to_json(sc.pre)},
                        {"W", matrix_to_json(sc.post)},
                        {"anc_dims", {sc.a1, sc.a2}}});
}

void save_super_choi(const std::string& path, const SuperChoi& w) {
  json j = matrix_to_json(w.matrix);
  j["space_order"] = SuperChoi::kSpaceOrder;
  j["d"] = w.d;
  write_json(path, j);
}

void save_result(const std::string& path, const DecompositionResult& result) {
  json trace = json::array();
  for (const auto& [run, dist] : result.per_restart_trace) trace.push_back({run, dist});
  write_json(path, json{{"best_distance", result.best_distance},
                        {"evaluations_used", result.evaluations_used},
                        {"seed", result.seed},
                        {"best_angles", result.best_angles},
                        {"per_restart_trace", std::move(trace)}});
}

LoadedInstance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  const json j = parse(path, text);
  if (!j.is_object()) fail(path, "top-level value must be an object");

  std::string kind;
  if (j.contains("kind")) {
    kind = j["kind"].get<std::string>();
  } else if (j.contains("kraus")) {
    kind = "channel";
  } else if (j.contains("choi")) {
    kind = "choi";
  } else if (j.contains("V")) {
    kind = "superchannel";
  } else {
    fail(path, "cannot determine instance kind");
  }

  LoadedInstance out;
  if (kind == "channel") {
    out.kind = LoadedInstance::Kind::kChannel;
    out.channel.d_in = field<int>(path, j, "d_in");
    out.channel.d_out = field<int>(path, j, "d_out");
    if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
      fail(path, "channel needs a nonempty kraus array");
    for (const json& k : j["kraus"]) out.channel.kraus.push_back(matrix_from_json(path, k));
    for (const Matrix& k : out.channel.kraus)
      if (k.rows() != out.channel.d_out || k.cols() != out.channel.d_in)
        fail(path, "Kraus operator shape does not match d_out x d_in");
  } else if (kind == "choi") {
    out.kind = LoadedInstance::Kind::kChoi;
    out.choi.d_in = field<int>(path, j, "d_in");
    out.choi.d_out = field<int>(path, j, "d_out");
    if (!j.contains("choi")) fail(path, "choi instance needs a \"choi\" matrix");
    out.choi.matrix = matrix_from_json(path, j["choi"]);
    if (out.choi.matrix.rows() != static_cast<long>(out.choi.d_in) * out.choi.d_out)
      fail(path, "Choi matrix dimension must equal d_in * d_out");
  } else if (kind == "superchannel") {
    out.kind = LoadedInstance::Kind::kSuperchannel;
    out.superchannel.d = field<int>(path, j, "d");
    if (!j.contains("V") || !j.contains("W")) fail(path, "superchannel needs V and W");
    out.superchannel.pre = matrix_from_json(path, j["V"]);
    out.superchannel.post = matrix_from_json(path, j["W"]);
    if (!j.contains("anc_dims") || !j["anc_dims"].is_array() || j["anc_dims"].size() != 2)
      fail(path, "superchannel needs anc_dims [a1, a2]");
    out.superchannel.a1 = j["anc_dims"][0].get<int>();
    out.superchannel.a2 = j["anc_dims"][1].get<int>();
    out.superchannel_class = j.value("class", "custom");
    if (out.superchannel.d < 1 || out.superchannel.a1 < 1 || out.superchannel.a2 < 1)
      fail(path, "superchannel dimensions must be positive");
    if (out.superchannel.pre.rows() !=
        static_cast<long>(out.superchannel.d) * out.superchannel.a1)
      fail(path, "V dimension must equal d * a1");
    if (out.superchannel.post.rows() %
            (static_cast<long>(out.superchannel.d) * out.superchannel.a2) !=
        0)
      fail(path, "W dimension must be divisible by d * a2");
  } else {
    fail(path, "unknown kind \"" + kind + "\"");
  }
  return out;
}

TaskFileConfig load_task_file(const std::string& path) {
  const std::string text = read_file(path);
  const json j = parse(path, text);
  if (!j.is_object()) fail(path, "top-level value must be an object");
  TaskFileConfig cfg;
  cfg.task = field<std::string>(path, j, "task");
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.restarts = j.value("restarts", 8);
  cfg.budget = j.value("budget", 0LL);
  cfg.tol = j.value("tol", 0.0);
  return cfg;
}

}  // namespace scf
