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

#include "b92/b92.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "b92/config.hpp"
#include "b92/harness.hpp"
#include "b92/protocol.hpp"

struct b92_config {
  b92::SessionConfig cfg;
  // Strategy kept across eve toggles so disabling and re-enabling restores it.
  b92::PnsStrategy eve_strategy;
};

struct b92_session {
  b92::SessionConfig cfg;
  b92::SessionResult result;
};

struct b92_table {
  std::vector<b92::StatsRow> rows;
};

namespace {

thread_local std::string g_last_error;

b92_status Fail(b92_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the core's exceptions onto status codes.
template <typename F>
b92_status Guard(F&& body) {
  try {
    return body();
  } catch (const b92::ValidationError& e) {
    return Fail(B92_ERR_VALIDATION, e.what());
  } catch (const b92::IoError& e) {
    return Fail(B92_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(B92_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(B92_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(B92_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(B92_ERR_INTERNAL, "unknown error");
  }
}

b92_status NullArgument(const char* name) {
  return Fail(B92_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

b92_stats ToC(const b92::SessionStats& s) {
  b92_stats out{};
  out.sent = s.sent;
  out.clicks_t1 = s.clicks_t1;
  out.clicks_t2 = s.clicks_t2;
  out.clicks_t3 = s.clicks_t3;
  out.double_clicks = s.double_clicks;
  out.sifted_len = s.sifted_len;
  out.sift_rate = s.sift_rate;
  out.has_qber = s.qber.has_value();
  out.qber = s.qber.value_or(0.0);
  out.has_eve_known_fraction = s.eve_known_fraction.has_value();
  out.eve_known_fraction = s.eve_known_fraction.value_or(0.0);
  out.bob_click_rate_no_eve_ref = s.bob_click_rate_no_eve_ref;
  return out;
}

b92_status NewConfig(b92::SessionConfig cfg, b92_config** out) {
  auto* handle = new b92_config{std::move(cfg), {}};
  if (handle->cfg.eve) handle->eve_strategy = *handle->cfg.eve;
  *out = handle;
  return B92_OK;
}

}  // namespace

extern "C" {

const char* b92_last_error(void) { return g_last_error.c_str(); }

const char* b92_version(void) { return "0.1.0"; }

void b92_string_free(char* s) { std::free(s); }

b92_status b92_config_default(b92_config** out) {
  if (!out) return NullArgument("out");
  return Guard([&] { return NewConfig(b92::SessionConfig{}, out); });
}

b92_status b92_config_from_json(const char* json, b92_config** out) {
  if (!json) return NullArgument("json");
  if (!out) return NullArgument("out");
  return Guard([&] { return NewConfig(b92::ParseConfigJson(json), out); });
}

b92_status b92_config_load(const char* path, b92_config** out) {
  if (!path) return NullArgument("path");
  if (!out) return NullArgument("out");
  return Guard([&] { return NewConfig(b92::LoadConfigFile(path), out); });
}

b92_status b92_config_to_json(const b92_config* cfg, char** out) {
  if (!cfg) return NullArgument("cfg");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(b92::ConfigToJson(cfg->cfg));
    return B92_OK;
  });
}

void b92_config_free(b92_config* cfg) { delete cfg; }

b92_status b92_config_get_seed(const b92_config* cfg, uint64_t* out) {
  if (!cfg) return NullArgument("cfg");
  if (!out) return NullArgument("out");
  *out = cfg->cfg.seed;
  return B92_OK;
}

b92_status b92_config_set_seed(b92_config* cfg, uint64_t seed) {
  if (!cfg) return NullArgument("cfg");
  cfg->cfg.seed = seed;
  return B92_OK;
}

b92_status b92_config_resolve_seed(b92_config* cfg, int has_cli_seed,
                                   uint64_t cli_seed) {
  if (!cfg) return NullArgument("cfg");
  return Guard([&] {
    std::optional<std::uint64_t> cli;
    if (has_cli_seed) cli = cli_seed;
    cfg->cfg.seed =
        b92::ResolveSeed(cli, std::getenv(b92::kSeedEnvVar), cfg->cfg.seed);
    return B92_OK;
  });
}

b92_status b92_config_set_eve_enabled(b92_config* cfg, int enabled) {
  if (!cfg) return NullArgument("cfg");
  if (enabled) {
    cfg->cfg.eve = cfg->eve_strategy;
  } else {
    if (cfg->cfg.eve) cfg->eve_strategy = *cfg->cfg.eve;
    cfg->cfg.eve.reset();
  }
  return B92_OK;
}

b92_status b92_session_run(const b92_config* cfg, b92_session** out) {
  if (!cfg) return NullArgument("cfg");
  if (!out) return NullArgument("out");
  return Guard([&] {
    b92::SessionResult result = b92::RunSession(cfg->cfg);
    *out = new b92_session{cfg->cfg, std::move(result)};
    return B92_OK;
  });
}

void b92_session_free(b92_session* session) { delete session; }

b92_status b92_session_stats(const b92_session* session, b92_stats* out) {
  if (!session) return NullArgument("session");
  if (!out) return NullArgument("out");
  *out = ToC(session->result.stats);
  return B92_OK;
}

b92_status b92_session_stats_csv(const b92_session* session, char** out) {
  if (!session) return NullArgument("session");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const b92::StatsRow row =
        b92::RowForRun(session->cfg, session->result.stats);
    *out = CopyString(b92::FormatStatsCsv({&row, 1}));
    return B92_OK;
  });
}

b92_status b92_session_records_csv(const b92_session* session, char** out) {
  if (!session) return NullArgument("session");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(b92::FormatRecordsCsv(session->result.records));
    return B92_OK;
  });
}

b92_status b92_session_summary(const b92_session* session, char** out) {
  if (!session) return NullArgument("session");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const b92::StatsRow row =
        b92::RowForRun(session->cfg, session->result.stats);
    *out = CopyString(b92::FormatSummary({&row, 1}));
    return B92_OK;
  });
}

b92_status b92_session_key(const b92_session* session, int party, char** out) {
  if (!session) return NullArgument("session");
  if (!out) return NullArgument("out");
  if (party != 0 && party != 1) {
    return Fail(B92_ERR_INVALID_ARGUMENT, "party must be 0 (Alice) or 1 (Bob)");
  }
  return Guard([&] {
    const b92::SiftedKey& key =
        party == 0 ? session->result.keys.alice : session->result.keys.bob;
    std::string bits;
    bits.reserve(key.size());
    for (int b : key.bits) bits.push_back(static_cast<char>('0' + b));
    *out = CopyString(bits);
    return B92_OK;
  });
}

b92_status b92_sweep_run(const b92_config* base, const char* axis,
                         const double* values, size_t n_values,
                         uint32_t trials, unsigned threads, b92_table** out) {
  if (!base) return NullArgument("base");
  if (!axis) return NullArgument("axis");
  if (!values && n_values > 0) return NullArgument("values");
  if (!out) return NullArgument("out");
  return Guard([&] {
    auto rows = b92::Sweep(base->cfg, b92::ParseSweepAxis(axis),
                           std::span<const double>(values, n_values), trials,
                           threads);
    *out = new b92_table{std::move(rows)};
    return B92_OK;
  });
}

void b92_table_free(b92_table* table) { delete table; }

b92_status b92_table_size(const b92_table* table, size_t* out) {
  if (!table) return NullArgument("table");
  if (!out) return NullArgument("out");
  *out = table->rows.size();
  return B92_OK;
}

b92_status b92_table_row_stats(const b92_table* table, size_t row,
                               b92_stats* out) {
  if (!table) return NullArgument("table");
  if (!out) return NullArgument("out");
  if (row >= table->rows.size()) {
    return Fail(B92_ERR_INVALID_ARGUMENT, "row index out of range");
  }
  *out = ToC(table->rows[row].stats);
  return B92_OK;
}

b92_status b92_table_csv(const b92_table* table, char** out) {
  if (!table) return NullArgument("table");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(b92::FormatStatsCsv(table->rows));
    return B92_OK;
  });
}

b92_status b92_table_summary(const b92_table* table, char** out) {
  if (!table) return NullArgument("table");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = CopyString(b92::FormatSummary(table->rows));
    return B92_OK;
  });
}

b92_status b92_table1_replay(char** report) {
  if (!report) return NullArgument("report");
  return Guard([&] {
    const b92::Table1Replay replay = b92::ReplayTable1();
    *report = CopyString(replay.report);
    if (!replay.matches) {
      return Fail(B92_ERR_FIXTURE_MISMATCH, "table1 replay did not yield 011");
    }
    return B92_OK;
  });
}

b92_status b92_write_file(const char* path, const char* text) {
  if (!path) return NullArgument("path");
  if (!text) return NullArgument("text");
  return Guard([&] {
    b92::WriteTextFile(path, text);
    return B92_OK;
  });
}

}  // extern "C"
