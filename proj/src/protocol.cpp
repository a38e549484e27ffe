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

#include "b92/protocol.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "b92/channel.hpp"

namespace b92 {
namespace {

// Textbook detection threshold relative to the phase-matched t2 maximum.
constexpr double kTextbookTolerance = 1e-9;

bool TextbookT2Click(const TimeBinPulsePair& unit_pair, Phase bob_phase,
                     double split_bob) {
  const double t2 =
      ComputeSlotIntensities(unit_pair, bob_phase, split_bob).t2;
  const double t2_max =
      ComputeSlotIntensities(unit_pair, unit_pair.phase, split_bob).t2;
  return std::abs(t2 - t2_max) <= kTextbookTolerance * t2_max;
}

// Sorts each arriving photon into t1/t2/t3/other-port with the single-photon
// probabilities of the unit-energy pulse pair.
std::array<std::uint64_t, 3> RoutePhotons(std::uint64_t photons,
                                          const SlotIntensities& unit_slots,
                                          RngStream& rng) {
  std::array<std::uint64_t, 3> counts{};
  const double c1 = unit_slots.t1;
  const double c2 = c1 + unit_slots.t2;
  const double c3 = c2 + unit_slots.t3;
  for (std::uint64_t i = 0; i < photons; ++i) {
    const double u = rng.Uniform();
    if (u < c1) {
      ++counts[0];
    } else if (u < c2) {
      ++counts[1];
    } else if (u < c3) {
      ++counts[2];
    }
  }
  return counts;
}

}  // namespace

Phase AlicePrepare(int bit) {
  if (bit == 0) return Phase::Zero();
  if (bit == 1) return Phase::Pi();
  throw std::invalid_argument("bit must be 0 or 1");
}

int AliceChooseBit(RngStream& rng) {
  return static_cast<int>(rng.NextU64() >> 63);
}

Phase BobChoosePhase(RngStream& rng) {
  return (rng.NextU64() >> 63) ? Phase::Pi() : Phase::Zero();
}

std::optional<int> BobMeasure(const ClickPattern& clicks, Phase bob_phase) {
  if (!clicks.t2) return std::nullopt;
  return bob_phase == Phase::Zero() ? 0 : 1;
}

SiftResult Sift(std::span<const PulseRecord> records) {
  SiftResult out;
  for (const PulseRecord& r : records) {
    if (!r.outcome) continue;
    out.bob.bits.push_back(*r.outcome);
    out.bob.positions.push_back(r.index);
    out.alice.bits.push_back(r.alice_bit);
    out.alice.positions.push_back(r.index);
  }
  return out;
}

double ComputeQber(const SiftedKey& alice, const SiftedKey& bob) {
  if (alice.size() != bob.size()) {
    throw std::invalid_argument("keys differ in length");
  }
  if (alice.empty()) {
    throw std::domain_error("empty key: QBER undefined");
  }
  std::size_t errors = 0;
  for (std::size_t i = 0; i < alice.size(); ++i) {
    if (alice.bits[i] != bob.bits[i]) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(alice.size());
}

PulseRecord SimulatePulse(const SessionConfig& cfg, std::uint64_t index,
                          bool with_eve) {
  PulseRecord rec;
  rec.index = index;

  RngStream alice(cfg.seed, StreamIdFor(index, Party::kAlice));
  rec.alice_bit = cfg.fixture_bits ? (*cfg.fixture_bits)[index - 1]
                                   : AliceChooseBit(alice);
  rec.alice_phase = AlicePrepare(rec.alice_bit);
  const bool textbook = cfg.mode == Mode::kTextbook;
  rec.n_source = textbook ? 1 : SamplePhotonNumber(cfg.mu, alice);

  RngStream bob(cfg.seed, StreamIdFor(index, Party::kBob));
  rec.bob_phase = cfg.fixture_phases_deg
                      ? Phase::FromDegrees((*cfg.fixture_phases_deg)[index - 1])
                      : BobChoosePhase(bob);

  std::uint64_t forwarded = rec.n_source;
  bool lossless = false;
  if (with_eve && cfg.eve) {
    RngStream eve(cfg.seed, StreamIdFor(index, Party::kEve));
    const InterceptResult hit = Intercept(rec.n_source, *cfg.eve, eve);
    rec.eve_stored = hit.stored;
    rec.eve_blocked = hit.blocked;
    forwarded = hit.forwarded;
    lossless = cfg.eve->lossless_forward;
  }

  const TimeBinPulsePair unit = Encode(1.0, rec.alice_bit,
                                       cfg.split_ratio_alice, cfg.time_bin_dt);
  if (textbook) {
    rec.n_arrived = forwarded;
    rec.clicks.t2 =
        forwarded >= 1 && TextbookT2Click(unit, rec.bob_phase,
                                          cfg.split_ratio_bob);
  } else {
    RngStream channel(cfg.seed, StreamIdFor(index, Party::kChannel));
    const Propagated prop =
        Propagate(unit, forwarded, cfg.channel, channel, lossless);
    rec.n_arrived = prop.photons;
    rec.phase_flipped = prop.phase_flipped;
    const SlotIntensities unit_slots =
        ComputeSlotIntensities(prop.pair, rec.bob_phase, cfg.split_ratio_bob);
    const auto counts = RoutePhotons(prop.photons, unit_slots, bob);
    const auto slot_click = [&](std::uint64_t n) {
      const bool photon = Thin(n, cfg.detector.efficiency, bob) > 0;
      const bool noise = DetectSlot(prop.background_mu, cfg.detector, bob);
      return photon || noise;
    };
    rec.clicks.t1 = slot_click(counts[0]);
    rec.clicks.t2 = slot_click(counts[1]);
    rec.clicks.t3 = slot_click(counts[2]);
  }
  rec.outcome = BobMeasure(rec.clicks, rec.bob_phase);
  return rec;
}

SessionResult RunSession(const SessionConfig& cfg) {
  ValidateOrThrow(cfg);
  SessionResult out;
  out.records.reserve(cfg.n_pulses);
  SessionStats& st = out.stats;
  for (std::uint64_t i = 1; i <= cfg.n_pulses; ++i) {
    PulseRecord rec = SimulatePulse(cfg, i, true);
    st.clicks_t1 += rec.clicks.t1;
    st.clicks_t2 += rec.clicks.t2;
    st.clicks_t3 += rec.clicks.t3;
    st.double_clicks += rec.clicks.count() >= 2;
    out.ledger.Record(i, rec.eve_stored);
    out.records.push_back(rec);
  }
  st.sent = cfg.n_pulses;
  out.keys = Sift(out.records);
  st.sifted_len = out.keys.bob.size();
  st.sift_rate =
      static_cast<double>(st.sifted_len) / static_cast<double>(st.sent);
  if (!out.keys.bob.empty()) {
    st.qber = ComputeQber(out.keys.alice, out.keys.bob);
    if (cfg.eve) {
      st.eve_known_fraction =
          Learn(out.ledger, out.keys.alice.positions, out.keys.alice.bits);
    }
  }
  if (cfg.eve) {
    std::uint64_t ref_clicks = 0;
    for (std::uint64_t i = 1; i <= cfg.n_pulses; ++i) {
      ref_clicks += SimulatePulse(cfg, i, false).clicks.t2;
    }
    st.bob_click_rate_no_eve_ref =
        static_cast<double>(ref_clicks) / static_cast<double>(st.sent);
  } else {
    st.bob_click_rate_no_eve_ref = st.sift_rate;
  }
  return out;
}

}  // namespace b92
