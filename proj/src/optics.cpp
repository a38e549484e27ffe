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

#include "b92/optics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace b92 {
namespace {

void RequireOpenUnit(double ratio, const char* what) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument(std::string(what) +
                                " must lie in (0, 1), got " +
                                std::to_string(ratio));
  }
}

}  // namespace

Phase Phase::FromRadians(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return Phase(r);
}

Phase Phase::FromDegrees(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0.0) d += 360.0;
  if (d >= 360.0) d = 0.0;
  return Phase(d / 180.0 * std::numbers::pi);
}

double Phase::degrees() const { return radians_ / std::numbers::pi * 180.0; }

bool Phase::operator==(const Phase& other) const {
  const double diff = std::abs(radians_ - other.radians_);
  return std::min(diff, kTwoPi - diff) <= 1e-12;
}

double Interfere(Phase phi_a, Phase phi_b) {
  // (1 + cos)/2 is exact at both fringe extremes.
  return 0.5 * (1.0 + std::cos(phi_a.radians() - phi_b.radians()));
}

TimeBinPulsePair Encode(double mu_source, int bit, double split_ratio,
                        double dt) {
  if (!(mu_source >= 0.0)) {
    throw std::invalid_argument("mean photon number must be >= 0, got " +
                                std::to_string(mu_source));
  }
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  RequireOpenUnit(split_ratio, "Alice split ratio");
  if (!(dt > 0.0)) {
    throw std::invalid_argument("time-bin separation must be > 0");
  }
  TimeBinPulsePair pair;
  pair.mu_ref = mu_source * (1.0 - split_ratio);
  pair.mu_sig = mu_source * split_ratio;
  pair.phase = bit == 0 ? Phase::Zero() : Phase::Pi();
  pair.dt = dt;
  return pair;
}

SlotIntensities ComputeSlotIntensities(const TimeBinPulsePair& pair,
                                       Phase phi_b, double split_ratio) {
  RequireOpenUnit(split_ratio, "Bob split ratio");
  const double s = split_ratio;
  const double k = kCombinerPortShare;
  const double sig_short = pair.mu_sig * (1.0 - s) * k;
  const double ref_long = pair.mu_ref * s * k;
  const double cross = 2.0 * std::sqrt(sig_short * ref_long) *
                       std::cos(pair.phase.radians() - phi_b.radians());
  SlotIntensities out;
  out.t1 = pair.mu_ref * (1.0 - s) * k;
  out.t3 = pair.mu_sig * s * k;
  out.t2 = std::max(0.0, sig_short + ref_long + cross);
  out.t2_other_port = std::max(0.0, sig_short + ref_long - cross);
  return out;
}

SlotTimes ComputeSlotTimes(const TimeBinPulsePair& pair) {
  return SlotTimes{0.0, pair.dt, 2.0 * pair.dt};
}

double TotalEnergy(const SlotIntensities& slots, const TimeBinPulsePair& pair,
                   double split_ratio) {
  // The undetected port sees the uninterfered slots with the complementary
  // combiner share.
  const double other = 1.0 - kCombinerPortShare;
  const double other_t1 = pair.mu_ref * (1.0 - split_ratio) * other;
  const double other_t3 = pair.mu_sig * split_ratio * other;
  return slots.t1 + slots.t2 + slots.t3 + slots.t2_other_port + other_t1 +
         other_t3;
}

}  // namespace b92
