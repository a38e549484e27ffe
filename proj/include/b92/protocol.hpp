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

// B92 over phase-encoded time bins: Alice's and Bob's per-pulse actions,
// sifting, error accounting and the end-to-end session.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "b92/adversary.hpp"
#include "b92/config.hpp"
#include "b92/optics.hpp"
#include "b92/rng.hpp"
#include "b92/stochastic.hpp"

namespace b92 {

// 0 -> phase 0, 1 -> phase pi. Throws std::invalid_argument otherwise.
Phase AlicePrepare(int bit);
int AliceChooseBit(RngStream& rng);
// 0 or pi with probability 1/2 each; one draw.
Phase BobChoosePhase(RngStream& rng);

// A t2 click is conclusive: bit 0 for Bob phase 0 and bit 1 for pi. Clicks in
// t1 or t3 carry no information and are ignored. nullopt is inconclusive.
std::optional<int> BobMeasure(const ClickPattern& clicks, Phase bob_phase);

struct PulseRecord {
  std::uint64_t index = 0;  // 1-based
  int alice_bit = 0;
  Phase alice_phase;
  Phase bob_phase;
  std::uint64_t n_source = 0;
  std::uint64_t eve_stored = 0;
  std::uint64_t n_arrived = 0;  // photons reaching Bob's interferometer
  bool eve_blocked = false;
  bool phase_flipped = false;
  ClickPattern clicks;
  std::optional<int> outcome;

  bool conclusive() const { return outcome.has_value(); }
};

struct SiftedKey {
  std::vector<int> bits;
  std::vector<std::uint64_t> positions;  // strictly increasing pulse indices

  std::size_t size() const { return bits.size(); }
  bool empty() const { return bits.empty(); }
};

struct SiftResult {
  SiftedKey alice;
  SiftedKey bob;
};

SiftResult Sift(std::span<const PulseRecord> records);

// Fraction of differing positions. Throws std::invalid_argument on unequal
// lengths and std::domain_error on empty keys.
double ComputeQber(const SiftedKey& alice, const SiftedKey& bob);

struct SessionStats {
  std::uint64_t sent = 0;
  std::uint64_t clicks_t1 = 0;
  std::uint64_t clicks_t2 = 0;
  std::uint64_t clicks_t3 = 0;
  std::uint64_t double_clicks = 0;  // pulses with clicks in two or more slots
  std::uint64_t sifted_len = 0;
  double sift_rate = 0.0;
  std::optional<double> qber;                // absent for an empty key
  std::optional<double> eve_known_fraction;  // absent without Eve or key
  // Bob's t2 click rate for the same session with Eve removed. Equal to
  // sift_rate when Eve is disabled.
  double bob_click_rate_no_eve_ref = 0.0;

  bool operator==(const SessionStats&) const = default;
};

struct SessionResult {
  std::vector<PulseRecord> records;
  SiftResult keys;
  SessionStats stats;
  EveLedger ledger;
};

// Simulates one pulse. Alice, Bob, Eve and the channel draw from their own
// per-pulse streams, so toggling Eve leaves every Alice and Bob choice intact.
PulseRecord SimulatePulse(const SessionConfig& cfg, std::uint64_t index,
                          bool with_eve);

// Validates cfg (throwing ValidationError), then runs every pulse, sifts and
// accumulates statistics. Deterministic in cfg.
SessionResult RunSession(const SessionConfig& cfg);

}  // namespace b92
