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

#include "b92/stochastic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace b92 {
namespace {

std::uint64_t PoissonInversion(double mu, RngStream& rng) {
  const double u = rng.Uniform();
  double p = std::exp(-mu);
  double cdf = p;
  std::uint64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= mu / static_cast<double>(k);
    if (p == 0.0) break;  // u within rounding of 1
    cdf += p;
  }
  return k;
}

// W. Hoermann, "The transformed rejection method for generating Poisson
// random variables", Insurance: Mathematics and Economics 12 (1993).
std::uint64_t PoissonPtrs(double mu, RngStream& rng) {
  const double slam = std::sqrt(mu);
  const double loglam = std::log(mu);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.Uniform() - 0.5;
    const double v = rng.Uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mu + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mu + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

std::uint64_t SamplePhotonNumber(double mu, RngStream& rng) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("Poisson mean must be finite and >= 0, got " +
                                std::to_string(mu));
  }
  if (mu == 0.0) return 0;
  if (mu < 10.0) return PoissonInversion(mu, rng);
  return PoissonPtrs(mu, rng);
}

std::uint64_t Thin(std::uint64_t n, double transmittance, RngStream& rng) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw std::invalid_argument("transmittance must lie in [0, 1], got " +
                                std::to_string(transmittance));
  }
  if (transmittance == 1.0) return n;
  if (transmittance == 0.0) return 0;
  std::uint64_t kept = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (rng.Bernoulli(transmittance)) ++kept;
  }
  return kept;
}

double ClickProbability(double mu_slot, const DetectorParams& det) {
  return 1.0 - (1.0 - det.dark_count_prob) *
                   std::exp(-det.efficiency * mu_slot);
}

bool DetectSlot(double mu_slot, const DetectorParams& det, RngStream& rng) {
  if (!(mu_slot >= 0.0)) {
    throw std::invalid_argument("slot intensity must be >= 0");
  }
  const double p = ClickProbability(mu_slot, det);
  if (p <= 0.0) return false;
  return rng.Bernoulli(p);
}

ClickPattern Detect(const SlotIntensities& slots, const DetectorParams& det,
                    RngStream& rng) {
  ClickPattern c;
  c.t1 = DetectSlot(slots.t1, det, rng);
  c.t2 = DetectSlot(slots.t2, det, rng);
  c.t3 = DetectSlot(slots.t3, det, rng);
  return c;
}

}  // namespace b92
