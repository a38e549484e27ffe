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

// Closed-form model of the two unbalanced interferometers used for time-bin
// phase encoding. Alice splits one coherent pulse into a reference pulse
// (short arm) and a phase-shifted signal pulse (long arm, delayed by dt). Bob
// repeats the split with his own phase on the long arm, so a single detector
// port sees three arrival slots:
//
//   t1  reference through Bob's short arm
//   t2  signal/short and reference/long, which interfere
//   t3  signal through Bob's long arm
//
// All quantities are mean photon numbers. Splitters are lossless.
#pragma once

#include <numbers>

namespace b92 {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Share of each path amplitude (squared) routed to the detector port by Bob's
// final combiner. The remainder leaves through the undetected port.
inline constexpr double kCombinerPortShare = 0.5;

// Angle in radians, canonicalised to [0, 2*pi).
class Phase {
 public:
  constexpr Phase() = default;

  static Phase FromRadians(double radians);
  // Reduces modulo 360 before converting, so 180 maps to exactly pi.
  static Phase FromDegrees(double degrees);
  static Phase Zero() { return Phase(); }
  static Phase Pi() { return FromRadians(std::numbers::pi); }

  double radians() const { return radians_; }
  double degrees() const;

  Phase operator+(Phase other) const {
    return FromRadians(radians_ + other.radians_);
  }
  Phase operator-(Phase other) const {
    return FromRadians(radians_ - other.radians_);
  }

  // Equal up to 1e-12 rad of circular distance.
  bool operator==(const Phase& other) const;

 private:
  explicit constexpr Phase(double canonical) : radians_(canonical) {}
  double radians_ = 0.0;
};

struct TimeBinPulsePair {
  double mu_ref = 0.0;
  double mu_sig = 0.0;
  Phase phase;
  double dt = 1.0;

  double total() const { return mu_ref + mu_sig; }
};

struct SlotIntensities {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t2_other_port = 0.0;
};

// Arrival times of the three detector slots relative to the reference pulse
// entering Bob's interferometer.
struct SlotTimes {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

// Relative t2 fringe: cos^2((phi_a - phi_b) / 2).
double Interfere(Phase phi_a, Phase phi_b);

// Throws std::invalid_argument for mu_source < 0, a split ratio outside
// (0, 1) or a non-positive dt.
TimeBinPulsePair Encode(double mu_source, int bit, double split_ratio,
                        double dt = 1.0);

SlotIntensities ComputeSlotIntensities(const TimeBinPulsePair& pair,
                                       Phase phi_b, double split_ratio);

SlotTimes ComputeSlotTimes(const TimeBinPulsePair& pair);

// Sum over both combiner ports and all three slots. Equals pair.total() for
// any input produced by ComputeSlotIntensities.
double TotalEnergy(const SlotIntensities& slots, const TimeBinPulsePair& pair,
                   double split_ratio);

}  // namespace b92
