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

// Counter-based random streams.
//
// A stream is identified by (seed, stream_id). Draw i of a stream is
// SplitMix64 applied to key + (i + 1) * golden, with key derived from both
// identifiers, so a stream can be created anywhere without replaying any
// other stream. The simulator uses one stream per pulse per party:
//
//   stream_id = pulse_index * 4 + party_tag
#pragma once

#include <cstdint>
#include <limits>

namespace b92 {

enum class Party : std::uint64_t {
  kAlice = 0,
  kBob = 1,
  kEve = 2,
  kChannel = 3,
};

inline constexpr std::uint64_t kPartiesPerPulse = 4;

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t StreamIdFor(std::uint64_t pulse_index, Party party) {
  return pulse_index * kPartiesPerPulse + static_cast<std::uint64_t>(party);
}

// Satisfies std::uniform_random_bit_generator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  constexpr RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed),
        stream_id_(stream_id),
        key_(SplitMix64(seed ^ SplitMix64(stream_id ^ 0xD1B54A32D192ED03ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() { return NextU64(); }

  constexpr std::uint64_t NextU64() {
    ++counter_;
    return SplitMix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  constexpr bool Bernoulli(double p) { return Uniform() < p; }

  constexpr std::uint64_t seed() const { return seed_; }
  constexpr std::uint64_t stream_id() const { return stream_id_; }
  constexpr std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace b92
