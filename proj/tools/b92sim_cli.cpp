// Copyright 2026 The b92sim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// b92sim command-line front end. Links only the C interface.
//
//   b92sim run   --config <path> [--seed N] [--out <csv>] [--records <csv>]
//   b92sim sweep --config <path> --axis length_km|mu --values v1,v2,...
//                [--trials N] [--seed N] [--threads N] [--out <csv>]
//   b92sim table1
//
// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 fixture
// mismatch.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "b92/b92.h"

namespace {

struct CString {
  char* p = nullptr;
  ~CString() { b92_string_free(p); }
};

struct ConfigDeleter {
  void operator()(b92_config* c) const { b92_config_free(c); }
};
struct SessionDeleter {
  void operator()(b92_session* s) const { b92_session_free(s); }
};
struct TableDeleter {
  void operator()(b92_table* t) const { b92_table_free(t); }
};
using ConfigPtr = std::unique_ptr<b92_config, ConfigDeleter>;

int Report(b92_status status) {
  if (status != B92_OK) {
    std::fprintf(stderr, "b92sim: %s\n", b92_last_error());
  }
  // Argument misuse reported by the library counts as a validation error.
  if (status == B92_ERR_INVALID_ARGUMENT) return B92_ERR_VALIDATION;
  return static_cast<int>(status);
}

b92_status LoadWithSeed(const std::string& path,
                        const std::optional<std::uint64_t>& seed,
                        ConfigPtr& out) {
  b92_config* raw = nullptr;
  if (b92_status s = b92_config_load(path.c_str(), &raw); s != B92_OK) {
    return s;
  }
  out.reset(raw);
  return b92_config_resolve_seed(out.get(), seed.has_value(),
                                 seed.value_or(0));
}

int Run(const std::string& config, const std::optional<std::uint64_t>& seed,
        const std::string& out_path, const std::string& records_path) {
  ConfigPtr cfg;
  if (b92_status s = LoadWithSeed(config, seed, cfg); s != B92_OK) {
    return Report(s);
  }
  b92_session* raw = nullptr;
  if (b92_status s = b92_session_run(cfg.get(), &raw); s != B92_OK) {
    return Report(s);
  }
  std::unique_ptr<b92_session, SessionDeleter> session(raw);

  CString csv, summary;
  if (b92_status s = b92_session_stats_csv(session.get(), &csv.p);
      s != B92_OK) {
    return Report(s);
  }
  if (b92_status s = b92_session_summary(session.get(), &summary.p);
      s != B92_OK) {
    return Report(s);
  }
  if (!records_path.empty()) {
    CString records;
    if (b92_status s = b92_session_records_csv(session.get(), &records.p);
        s != B92_OK) {
      return Report(s);
    }
    if (b92_status s = b92_write_file(records_path.c_str(), records.p);
        s != B92_OK) {
      return Report(s);
    }
  }
  if (out_path.empty()) {
    std::fputs(csv.p, stdout);
    std::fputs(summary.p, stderr);
  } else {
    if (b92_status s = b92_write_file(out_path.c_str(), csv.p); s != B92_OK) {
      return Report(s);
    }
    std::fputs(summary.p, stdout);
  }
  return 0;
}

int SweepCmd(const std::string& config,
             const std::optional<std::uint64_t>& seed, const std::string& axis,
             const std::vector<double>& values, std::uint32_t trials,
             unsigned threads, const std::string& out_path) {
  ConfigPtr cfg;
  if (b92_status s = LoadWithSeed(config, seed, cfg); s != B92_OK) {
    return Report(s);
  }
  b92_table* raw = nullptr;
  if (b92_status s = b92_sweep_run(cfg.get(), axis.c_str(), values.data(),
                                   values.size(), trials, threads, &raw);
      s != B92_OK) {
    return Report(s);
  }
  std::unique_ptr<b92_table, TableDeleter> table(raw);
  CString csv, summary;
  if (b92_status s = b92_table_csv(table.get(), &csv.p); s != B92_OK) {
    return Report(s);
  }
  if (b92_status s = b92_table_summary(table.get(), &summary.p); s != B92_OK) {
    return Report(s);
  }
  if (out_path.empty()) {
    std::fputs(csv.p, stdout);
    std::fputs(summary.p, stderr);
  } else {
    if (b92_status s = b92_write_file(out_path.c_str(), csv.p); s != B92_OK) {
      return Report(s);
    }
    std::fputs(summary.p, stdout);
  }
  return 0;
}

int Table1() {
  CString report;
  const b92_status s = b92_table1_replay(&report.p);
  if (report.p) std::fputs(report.p, stdout);
  return Report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator for phase-encoded B92 key distribution"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(b92_version()));

  std::string config, out_path, records_path, axis;
  std::optional<std::uint64_t> seed;
  std::vector<double> values;
  std::uint32_t trials = 1;
  unsigned threads = 0;

  auto* run = app.add_subcommand("run", "Run one session");
  run->add_option("--config", config, "JSON session config")->required();
  run->add_option("--seed", seed, "Seed (overrides QKD_SIM_SEED and config)");
  run->add_option("--out", out_path, "Write the stats CSV here");
  run->add_option("--records", records_path, "Write per-pulse records here");

  auto* sweep = app.add_subcommand("sweep", "Sweep fiber length or mu");
  sweep->add_option("--config", config, "JSON base config")->required();
  sweep->add_option("--axis", axis, "length_km or mu")
      ->required()
      ->check(CLI::IsMember({"length_km", "mu"}));
  sweep->add_option("--values", values, "Comma-separated axis values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--trials", trials, "Trials per value")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Base seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = auto)");
  sweep->add_option("--out", out_path, "Write the stats CSV here");

  auto* table1 =
      app.add_subcommand("table1", "Replay the eight-pulse worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : B92_ERR_VALIDATION;
  }

  if (*run) return Run(config, seed, out_path, records_path);
  if (*sweep) {
    return SweepCmd(config, seed, axis, values, trials, threads, out_path);
  }
  if (*table1) return Table1();
  return B92_ERR_VALIDATION;
}
