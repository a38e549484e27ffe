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

// Experiment orchestration: parameter sweeps, CSV reporting and the table1
// replay.
//
// Stats CSV columns, in order:
//
//   axis_value,trial,seed,sent,clicks_t1,clicks_t2,clicks_t3,double_clicks,
//   sifted_len,sift_rate,qber,eve_known_fraction,bob_click_rate_no_eve_ref
//
// Counts are integers, fractions use six significant digits and absent
// values are empty fields. Lines end in '\n'.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "b92/config.hpp"
#include "b92/protocol.hpp"

namespace b92 {

enum class SweepAxis { kLengthKm, kMu };

// "length_km" or "mu"; throws ValidationError otherwise.
SweepAxis ParseSweepAxis(std::string_view name);
std::string_view SweepAxisName(SweepAxis axis);

struct StatsRow {
  std::optional<double> axis_value;  // absent for a single run
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;
  SessionStats stats;

  bool operator==(const StatsRow&) const = default;
};

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::size_t value_index,
                         std::uint32_t trial);

// One row per (value, trial), ordered by value index then trial. Points run
// on up to `threads` workers (0 picks the hardware concurrency); the output
// does not depend on the thread count. Throws ValidationError when values is
// empty, trials is 0 or any derived config is invalid.
std::vector<StatsRow> Sweep(const SessionConfig& base, SweepAxis axis,
                            std::span<const double> values,
                            std::uint32_t trials, unsigned threads = 0);

StatsRow RowForRun(const SessionConfig& cfg, const SessionStats& stats);

inline constexpr std::string_view kStatsCsvHeader =
    "axis_value,trial,seed,sent,clicks_t1,clicks_t2,clicks_t3,double_clicks,"
    "sifted_len,sift_rate,qber,eve_known_fraction,bob_click_rate_no_eve_ref";

std::string FormatFraction(double value);
std::string FormatStatsCsv(std::span<const StatsRow> rows);
// Inverse of FormatStatsCsv. Throws std::invalid_argument on malformed input.
std::vector<StatsRow> ParseStatsCsv(std::string_view text);

// index,alice_bit,alice_phase_deg,bob_phase_deg,n_source,eve_stored,
// n_arrived,t1,t2,t3,click,bob_bit
std::string FormatRecordsCsv(std::span<const PulseRecord> records);

std::string FormatSummary(std::span<const StatsRow> rows);

// CLI flag > QKD_SIM_SEED > config. Throws ValidationError if the
// environment value is not a base-10 unsigned 64-bit integer.
std::uint64_t ResolveSeed(std::optional<std::uint64_t> cli_seed,
                          const char* env_value, std::uint64_t config_seed);

inline constexpr const char* kSeedEnvVar = "QKD_SIM_SEED";

void WriteTextFile(const std::filesystem::path& path, std::string_view text);

struct Table1Replay {
  bool matches = false;  // clicks Y,N,Y,N,N,N,Y,N and key 011 at {1,3,7}
  std::string report;
  SessionResult result;
};

Table1Replay ReplayTable1();

}  // namespace b92
