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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "b92/channel.hpp"
#include "gtest/gtest.h"
#include "stat_util.hpp"

namespace b92 {
namespace {

using testing::BinomialSigma;

SessionConfig IdealStochastic(std::uint64_t n, double mu) {
  SessionConfig cfg;
  cfg.n_pulses = n;
  cfg.mu = mu;
  cfg.channel = {0.0, 0.2, 0.0};
  cfg.detector = {1.0, 0.0};
  return cfg;
}

SessionConfig Textbook(std::uint64_t n) {
  SessionConfig cfg;
  cfg.mode = Mode::kTextbook;
  cfg.n_pulses = n;
  return cfg;
}

PulseRecord Conclusive(std::uint64_t index, int alice_bit, int bob_bit) {
  PulseRecord r;
  r.index = index;
  r.alice_bit = alice_bit;
  r.clicks.t2 = true;
  r.outcome = bob_bit;
  return r;
}

TEST(AlicePrepare, BitToPhase) {
  EXPECT_EQ(AlicePrepare(0).radians(), 0.0);
  EXPECT_EQ(AlicePrepare(1).radians(), std::numbers::pi);
  EXPECT_THROW(AlicePrepare(2), std::invalid_argument);
}

TEST(AlicePrepare, MatchedBasisRoundTrip) {
  for (int bit : {0, 1}) {
    const Phase phase = AlicePrepare(bit);
    ClickPattern clicks;
    clicks.t2 = true;
    EXPECT_EQ(BobMeasure(clicks, phase), bit);
  }
}

TEST(BobChoosePhase, FairCoin) {
  const int n = 100000;
  int pis = 0;
  for (int i = 0; i < n; ++i) {
    RngStream rng(17, StreamIdFor(i, Party::kBob));
    const Phase p = BobChoosePhase(rng);
    ASSERT_TRUE(p == Phase::Zero() || p == Phase::Pi());
    pis += p == Phase::Pi();
  }
  EXPECT_NEAR(static_cast<double>(pis) / n, 0.5, 3 * BinomialSigma(0.5, n));
}

TEST(BobChoosePhase, Reproducible) {
  for (int i = 0; i < 100; ++i) {
    RngStream a(5, i), b(5, i);
    EXPECT_EQ(BobChoosePhase(a), BobChoosePhase(b));
  }
}

TEST(BobChoosePhase, IndependentOfAliceBits) {
  const int n = 100000;
  std::vector<int> bits, phases;
  for (int i = 1; i <= n; ++i) {
    RngStream alice(23, StreamIdFor(i, Party::kAlice));
    RngStream bob(23, StreamIdFor(i, Party::kBob));
    bits.push_back(AliceChooseBit(alice));
    phases.push_back(BobChoosePhase(bob) == Phase::Pi());
  }
  EXPECT_LT(std::abs(testing::Correlation(bits, phases)), 3.0 / std::sqrt(n));
}

TEST(BobMeasure, OnlyT2IsRead) {
  ClickPattern t2;
  t2.t2 = true;
  EXPECT_EQ(BobMeasure(t2, Phase::Zero()), 0);
  EXPECT_EQ(BobMeasure(t2, Phase::Pi()), 1);
  EXPECT_EQ(BobMeasure(ClickPattern{}, Phase::Zero()), std::nullopt);
  EXPECT_EQ(BobMeasure(ClickPattern{}, Phase::Pi()), std::nullopt);
  ClickPattern t1;
  t1.t1 = true;
  EXPECT_EQ(BobMeasure(t1, Phase::Pi()), std::nullopt);
  ClickPattern t3;
  t3.t3 = true;
  EXPECT_EQ(BobMeasure(t3, Phase::Zero()), std::nullopt);
  ClickPattern both{false, true, true};
  EXPECT_EQ(BobMeasure(both, Phase::Pi()), 1);
}

TEST(Sift, Table1Fixture) {
  const SessionResult r = RunSession(Table1Config());
  std::string clicks;
  for (const auto& rec : r.records) clicks += rec.clicks.t2 ? 'Y' : 'N';
  EXPECT_EQ(clicks, "YNYNNNYN");
  EXPECT_EQ(r.keys.bob.bits, (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(r.keys.bob.positions, (std::vector<std::uint64_t>{1, 3, 7}));
  EXPECT_EQ(r.keys.alice.bits, r.keys.bob.bits);
  EXPECT_EQ(r.keys.alice.positions, r.keys.bob.positions);
}

TEST(Sift, AllInconclusiveGivesEmptyKeys) {
  std::vector<PulseRecord> records(5);
  for (std::size_t i = 0; i < records.size(); ++i) records[i].index = i + 1;
  const SiftResult s = Sift(records);
  EXPECT_TRUE(s.alice.empty());
  EXPECT_TRUE(s.bob.empty());
}

TEST(Sift, KeepsAliceBitsAtBobPositions) {
  const std::vector<PulseRecord> records = {Conclusive(2, 1, 1),
                                            Conclusive(5, 0, 1)};
  const SiftResult s = Sift(records);
  EXPECT_EQ(s.alice.bits, (std::vector<int>{1, 0}));
  EXPECT_EQ(s.bob.bits, (std::vector<int>{1, 1}));
  EXPECT_EQ(s.alice.positions, (std::vector<std::uint64_t>{2, 5}));
}

TEST(Sift, TextbookMatchedBasesSiftEverything) {
  SessionConfig cfg = Textbook(6);
  cfg.fixture_bits = std::vector<int>{0, 1, 0, 1, 1, 0};
  cfg.fixture_phases_deg = std::vector<double>{0, 180, 0, 180, 180, 0};
  const SessionResult r = RunSession(cfg);
  EXPECT_EQ(r.stats.sift_rate, 1.0);
  EXPECT_EQ(r.stats.qber, 0.0);
}

TEST(ComputeQber, Arithmetic) {
  SiftedKey a, b;
  a.bits = {0, 1, 1, 0, 1, 0, 0, 1};
  a.positions = {1, 2, 3, 4, 5, 6, 7, 8};
  b = a;
  EXPECT_EQ(ComputeQber(a, b), 0.0);
  for (int& bit : b.bits) bit ^= 1;
  EXPECT_EQ(ComputeQber(a, b), 1.0);
  b = a;
  b.bits[3] ^= 1;
  EXPECT_EQ(ComputeQber(a, b), 0.125);
}

TEST(ComputeQber, Errors) {
  SiftedKey a, b;
  EXPECT_THROW(ComputeQber(a, b), std::domain_error);
  a.bits = {1};
  a.positions = {1};
  EXPECT_THROW(ComputeQber(a, b), std::invalid_argument);
}

TEST(RunSession, IdealStochasticHasNoErrors) {
  SessionConfig cfg = IdealStochastic(100000, 0.1);
  const SessionResult r = RunSession(cfg);
  ASSERT_TRUE(r.stats.qber.has_value());
  EXPECT_EQ(*r.stats.qber, 0.0);
  // Matched phases: t2 = mu/2. Half the pulses are matched.
  const double expected = 0.5 * (1 - std::exp(-1.0 * 0.5 * cfg.mu));
  EXPECT_NEAR(r.stats.sift_rate, expected,
              3 * BinomialSigma(expected, cfg.n_pulses));
}

TEST(RunSession, SiftRateMatchesClosedFormWithLossAndEfficiency) {
  SessionConfig cfg = IdealStochastic(200000, 0.8);
  cfg.channel = {15.0, 0.2, 0.0};
  cfg.detector = {0.3, 0.0};
  const SessionResult r = RunSession(cfg);
  const double t2_max =
      ComputeSlotIntensities(Encode(cfg.mu, 0, 0.5), Phase::Zero(), 0.5).t2;
  const double eta_t = cfg.detector.efficiency * Transmittance(cfg.channel);
  const double expected = 0.5 * (1 - std::exp(-eta_t * t2_max));
  EXPECT_NEAR(r.stats.sift_rate, expected,
              3 * BinomialSigma(expected, cfg.n_pulses));
  EXPECT_EQ(*r.stats.qber, 0.0);
}

TEST(RunSession, SlotRatesMatchMeanFieldDetector) {
  // Photon-by-photon routing must reproduce the mean-field click law in every
  // slot, including background and dark counts.
  SessionConfig cfg = IdealStochastic(200000, 0.6);
  cfg.split_ratio_alice = 0.3;
  cfg.split_ratio_bob = 0.6;
  cfg.channel = {10.0, 0.2, 0.01};
  cfg.detector = {0.5, 1e-3};
  const SessionResult r = RunSession(cfg);
  const double t = Transmittance(cfg.channel);
  double e1 = 0, e2 = 0, e3 = 0;
  for (int bit : {0, 1}) {
    for (Phase bob : {Phase::Zero(), Phase::Pi()}) {
      SlotIntensities s = ComputeSlotIntensities(
          Encode(cfg.mu * t, bit, cfg.split_ratio_alice), bob,
          cfg.split_ratio_bob);
      e1 += 0.25 * ClickProbability(s.t1 + cfg.channel.background_mu, cfg.detector);
      e2 += 0.25 * ClickProbability(s.t2 + cfg.channel.background_mu, cfg.detector);
      e3 += 0.25 * ClickProbability(s.t3 + cfg.channel.background_mu, cfg.detector);
    }
  }
  const double n = static_cast<double>(cfg.n_pulses);
  EXPECT_NEAR(r.stats.clicks_t1 / n, e1, 3 * BinomialSigma(e1, n));
  EXPECT_NEAR(r.stats.clicks_t2 / n, e2, 3 * BinomialSigma(e2, n));
  EXPECT_NEAR(r.stats.clicks_t3 / n, e3, 3 * BinomialSigma(e3, n));
}

TEST(RunSession, TextbookRandomBasesSiftHalf) {
  const SessionResult r = RunSession(Textbook(100000));
  EXPECT_NEAR(r.stats.sift_rate, 0.5, 3 * BinomialSigma(0.5, 100000));
  EXPECT_EQ(*r.stats.qber, 0.0);
  for (const PulseRecord& rec : r.records) {
    if (rec.conclusive()) {
      ASSERT_EQ(rec.alice_phase, rec.bob_phase);
      ASSERT_EQ(*rec.outcome, rec.alice_bit);
    }
  }
}

TEST(RunSession, TextbookUnbalancedSplitStillSiftsMatchedOnly) {
  SessionConfig cfg = Textbook(2000);
  cfg.split_ratio_alice = 0.2;
  cfg.split_ratio_bob = 0.8;
  const SessionResult r = RunSession(cfg);
  for (const PulseRecord& rec : r.records) {
    ASSERT_EQ(rec.clicks.t2, rec.alice_phase == rec.bob_phase);
  }
}

TEST(RunSession, RecordInvariants) {
  SessionConfig cfg = IdealStochastic(20000, 2.0);
  cfg.eve = PnsStrategy{};
  cfg.detector = {0.7, 1e-3};
  const SessionResult r = RunSession(cfg);
  std::uint64_t prev = 0;
  for (const PulseRecord& rec : r.records) {
    ASSERT_EQ(rec.index, prev + 1);
    prev = rec.index;
    ASSERT_EQ(rec.alice_phase == Phase::Pi(), rec.alice_bit == 1);
    ASSERT_EQ(rec.conclusive(), rec.clicks.t2);
    ASSERT_LE(rec.eve_stored, rec.n_source);
    ASSERT_LE(rec.n_arrived + rec.eve_stored, rec.n_source);
  }
  EXPECT_EQ(r.keys.alice.positions, r.keys.bob.positions);
  EXPECT_EQ(r.stats.sifted_len, r.stats.clicks_t2);
  EXPECT_DOUBLE_EQ(r.stats.sift_rate,
                   static_cast<double>(r.stats.sifted_len) / r.stats.sent);
}

TEST(RunSession, DoubleClicksCounted) {
  SessionConfig cfg = IdealStochastic(20000, 5.0);
  const SessionResult r = RunSession(cfg);
  std::uint64_t doubles = 0;
  for (const auto& rec : r.records) doubles += rec.clicks.count() >= 2;
  EXPECT_EQ(r.stats.double_clicks, doubles);
  EXPECT_GT(doubles, 0u);
}

TEST(RunSession, Deterministic) {
  SessionConfig cfg = IdealStochastic(5000, 0.5);
  cfg.detector = {0.5, 1e-2};
  cfg.eve = PnsStrategy{1, 0.3, false};
  const SessionResult a = RunSession(cfg);
  const SessionResult b = RunSession(cfg);
  EXPECT_EQ(a.stats, b.stats);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].clicks, b.records[i].clicks);
    EXPECT_EQ(a.records[i].n_source, b.records[i].n_source);
    EXPECT_EQ(a.records[i].outcome, b.records[i].outcome);
  }
  cfg.seed += 1;
  EXPECT_NE(RunSession(cfg).stats, a.stats);
}

TEST(RunSession, EveToggleKeepsAliceAndBobChoices) {
  SessionConfig cfg = IdealStochastic(5000, 0.5);
  const SessionResult plain = RunSession(cfg);
  cfg.eve = PnsStrategy{1, 0.5, true};
  const SessionResult attacked = RunSession(cfg);
  for (std::size_t i = 0; i < plain.records.size(); ++i) {
    ASSERT_EQ(plain.records[i].alice_bit, attacked.records[i].alice_bit);
    ASSERT_EQ(plain.records[i].bob_phase, attacked.records[i].bob_phase);
    ASSERT_EQ(plain.records[i].n_source, attacked.records[i].n_source);
  }
  EXPECT_DOUBLE_EQ(attacked.stats.bob_click_rate_no_eve_ref,
                   plain.stats.sift_rate);
}

TEST(RunSession, RejectsInvalidConfig) {
  SessionConfig cfg;
  cfg.mu = -1;
  EXPECT_THROW(RunSession(cfg), ValidationError);
}

}  // namespace
}  // namespace b92
