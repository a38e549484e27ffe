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

// Session configuration, its JSON schema and validation.
//
// JSON keys (phases in degrees, lengths in km):
//
//   n_pulses, mu, mode ("textbook" | "stochastic"), seed,
//   split_ratio_alice, split_ratio_bob, time_bin_dt,
//   channel.{length_km, attenuation_db_per_km, background_mu,
//            coherence_length_km},
//   detector.{efficiency, dark_count_prob},
//   eve.{enabled, store_count, block_singles_prob, lossless_forward},
//   fixture ("table1"), fixture_bits [0|1...], fixture_phases [deg...]
//
// fixture_phases are Bob's phases. Alice's phases follow from her bits.
// Unknown keys are rejected.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "b92/adversary.hpp"
#include "b92/channel.hpp"
#include "b92/stochastic.hpp"

namespace b92 {

enum class Mode {
  // One photon per pulse, ideal detection, no channel. A t2 click happens
  // iff the t2 intensity sits at its phase-matched maximum.
  kTextbook,
  kStochastic,
};

std::string_view ModeName(Mode mode);

struct SessionConfig {
  std::uint64_t n_pulses = 100000;
  double mu = 0.1;
  Mode mode = Mode::kStochastic;
  double split_ratio_alice = 0.5;
  double split_ratio_bob = 0.5;
  double time_bin_dt = 1.0;
  ChannelParams channel{25.0, 0.2, 0.0};
  DetectorParams detector{0.1, 1e-5};
  std::optional<PnsStrategy> eve;
  std::uint64_t seed = 1;
  std::optional<std::vector<int>> fixture_bits;
  std::optional<std::vector<double>> fixture_phases_deg;
};

struct ConfigIssue {
  std::string key;
  std::string message;
};

std::string FormatIssues(const std::vector<ConfigIssue>& issues);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ConfigIssue> issues);
  ValidationError(std::string key, std::string message);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Every violated constraint, in key order. Empty means valid.
std::vector<ConfigIssue> Validate(const SessionConfig& cfg);
void ValidateOrThrow(const SessionConfig& cfg);

// Malformed JSON, wrong types, unknown keys and constraint violations are
// all reported together in one ValidationError.
SessionConfig ParseConfigJson(std::string_view text);
SessionConfig LoadConfigFile(const std::filesystem::path& path);
std::string ConfigToJson(const SessionConfig& cfg);

// Alice's bits and Bob's phases from the worked eight-pulse B92 example.
inline constexpr int kTable1Bits[] = {0, 1, 1, 1, 0, 0, 1, 1};
inline constexpr double kTable1BobPhasesDeg[] = {0, 0, 180, 0, 180, 180, 180, 0};

SessionConfig Table1Config();

}  // namespace b92
