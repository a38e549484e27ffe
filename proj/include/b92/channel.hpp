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

// Fiber channel: dB-law attenuation, incoherent background light and an
// optional phase-flip decoherence knob.
#pragma once

#include <cstdint>
#include <limits>

#include "b92/optics.hpp"
#include "b92/rng.hpp"

namespace b92 {

struct ChannelParams {
  double length_km = 0.0;
  double attenuation_db_per_km = 0.2;
  double background_mu = 0.0;  // mean background photons per slot
  // Phase coherence length. Infinity disables phase flips.
  double coherence_length_km = std::numeric_limits<double>::infinity();
};

// 10^(-a * L / 10).
double Transmittance(const ChannelParams& p);

// 1 - exp(-L / L_c); zero when the coherence length is infinite.
double PhaseFlipProbability(const ChannelParams& p);

struct Propagated {
  TimeBinPulsePair pair;     // signal phase shifted by pi if flipped
  std::uint64_t photons = 0;  // photons surviving the fiber
  bool phase_flipped = false;
  double background_mu = 0.0;  // added to each of t1, t2, t3 after interference
};

// Thins n photons by Transmittance(p) (or 1 when lossless), then draws the
// phase flip. Draw order on rng: thinning, then the flip.
Propagated Propagate(const TimeBinPulsePair& pair, std::uint64_t n,
                     const ChannelParams& p, RngStream& rng,
                     bool lossless = false);

}  // namespace b92
