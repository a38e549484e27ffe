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

#include "b92/channel.hpp"

#include <cmath>

#include "b92/stochastic.hpp"

namespace b92 {

double Transmittance(const ChannelParams& p) {
  return std::pow(10.0, -p.attenuation_db_per_km * p.length_km / 10.0);
}

double PhaseFlipProbability(const ChannelParams& p) {
  if (std::isinf(p.coherence_length_km)) return 0.0;
  return -std::expm1(-p.length_km / p.coherence_length_km);
}

Propagated Propagate(const TimeBinPulsePair& pair, std::uint64_t n,
                     const ChannelParams& p, RngStream& rng, bool lossless) {
  Propagated out;
  out.pair = pair;
  out.photons = Thin(n, lossless ? 1.0 : Transmittance(p), rng);
  const double p_flip = lossless ? 0.0 : PhaseFlipProbability(p);
  if (p_flip > 0.0 && rng.Bernoulli(p_flip)) {
    out.phase_flipped = true;
    out.pair.phase = pair.phase + Phase::Pi();
  }
  out.background_mu = p.background_mu;
  return out;
}

}  // namespace b92
