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

// Photon-number-splitting eavesdropper acting at Alice's output.
//
// Eve keeps store_count photons from every multiphoton pulse (always leaving
// at least one), forwards the rest and may suppress single-photon pulses.
// A stored photon is treated as full knowledge of the pulse's bit once Bob
// announces the conclusive positions.
#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "b92/rng.hpp"

namespace b92 {

struct PnsStrategy {
  std::uint64_t store_count = 1;
  double block_singles_prob = 0.0;
  bool lossless_forward = false;
};

struct InterceptResult {
  std::uint64_t stored = 0;
  std::uint64_t forwarded = 0;
  bool blocked = false;
};

// Draws from rng only for single-photon pulses with 0 < block_singles_prob < 1.
InterceptResult Intercept(std::uint64_t n, const PnsStrategy& strategy,
                          RngStream& rng);

struct EveLedger {
  std::map<std::uint64_t, std::uint64_t> stored;  // pulse index -> photons
  std::map<std::uint64_t, int> known_bits;        // pulse index -> bit

  void Record(std::uint64_t pulse_index, std::uint64_t stored_photons) {
    if (stored_photons > 0) stored[pulse_index] = stored_photons;
  }
};

// Fills ledger.known_bits for every sifted position where Eve holds a photon
// and returns |known| / |sifted|. Throws std::domain_error on an empty key
// and std::invalid_argument if the spans differ in length.
double Learn(EveLedger& ledger, std::span<const std::uint64_t> sifted_positions,
             std::span<const int> alice_bits);

}  // namespace b92
