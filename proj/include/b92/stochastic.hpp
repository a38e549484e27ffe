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

// Photon-number sampling, loss thinning and the threshold detector model.
#pragma once

#include <cstdint>

#include "b92/optics.hpp"
#include "b92/rng.hpp"

namespace b92 {

struct DetectorParams {
  double efficiency = 1.0;       // eta, [0, 1]
  double dark_count_prob = 0.0;  // per slot per gate, [0, 1]
};

struct ClickPattern {
  bool t1 = false;
  bool t2 = false;
  bool t3 = false;

  int count() const { return int{t1} + int{t2} + int{t3}; }
  bool operator==(const ClickPattern&) const = default;
};

// Exact Poisson draw. Inversion by sequential search below mu = 10 and the
// PTRS transformed-rejection method above. Throws std::invalid_argument for
// negative or non-finite mu.
std::uint64_t SamplePhotonNumber(double mu, RngStream& rng);

// Binomial(n, transmittance): each photon survives independently. Throws
// std::invalid_argument when transmittance is outside [0, 1].
std::uint64_t Thin(std::uint64_t n, double transmittance, RngStream& rng);

// 1 - (1 - p_dark) * exp(-eta * mu_slot).
double ClickProbability(double mu_slot, const DetectorParams& det);

bool DetectSlot(double mu_slot, const DetectorParams& det, RngStream& rng);

// Independent DetectSlot on t1, t2, t3 (in that order).
ClickPattern Detect(const SlotIntensities& slots, const DetectorParams& det,
                    RngStream& rng);

}  // namespace b92
