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

// Drives the shared library through b92.h only.
#include "b92/b92.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "gtest/gtest.h"

namespace {

std::string DataPath(const char* name) {
  const char* dir = std::getenv("B92_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

std::string Take(char* s) {
  std::string out = s ? s : "";
  b92_string_free(s);
  return out;
}

struct Config {
  b92_config* p = nullptr;
  ~Config() { b92_config_free(p); }
};
struct Session {
  b92_session* p = nullptr;
  ~Session() { b92_session_free(p); }
};
struct Table {
  b92_table* p = nullptr;
  ~Table() { b92_table_free(p); }
};

TEST(CApi, DefaultConfigRuns) {
  Config cfg;
  ASSERT_EQ(b92_config_default(&cfg.p), B92_OK);
  ASSERT_EQ(b92_config_from_json(R"({"n_pulses": 1000})", &cfg.p), B92_OK);
  Session s;
  ASSERT_EQ(b92_session_run(cfg.p, &s.p), B92_OK);
  b92_stats st{};
  ASSERT_EQ(b92_session_stats(s.p, &st), B92_OK);
  EXPECT_EQ(st.sent, 1000u);
  EXPECT_EQ(st.sifted_len, st.clicks_t2);
}

TEST(CApi, ValidationErrorNamesKey) {
  b92_config* cfg = nullptr;
  EXPECT_EQ(b92_config_from_json(R"({"mu": -1})", &cfg), B92_ERR_VALIDATION);
  EXPECT_EQ(cfg, nullptr);
  EXPECT_NE(std::strstr(b92_last_error(), "mu"), nullptr);

  EXPECT_EQ(b92_config_load(DataPath("invalid.json").c_str(), &cfg),
            B92_ERR_VALIDATION);
  EXPECT_NE(std::strstr(b92_last_error(), "fixture_bits"), nullptr);
  EXPECT_NE(std::strstr(b92_last_error(), "mu"), nullptr);
}

TEST(CApi, MissingFileIsIoError) {
  b92_config* cfg = nullptr;
  EXPECT_EQ(b92_config_load("/nonexistent/b92.json", &cfg), B92_ERR_IO);
  EXPECT_NE(std::strstr(b92_last_error(), "/nonexistent/b92.json"), nullptr);
  EXPECT_EQ(b92_write_file("/nonexistent/dir/x.csv", "x"), B92_ERR_IO);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(b92_config_default(nullptr), B92_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(b92_session_run(nullptr, nullptr), B92_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::strstr(b92_last_error(), "null"), nullptr);
  b92_config_free(nullptr);
  b92_session_free(nullptr);
  b92_table_free(nullptr);
  b92_string_free(nullptr);
}

TEST(CApi, StatsCsvAndKeys) {
  Config cfg;
  ASSERT_EQ(b92_config_load(DataPath("ideal.json").c_str(), &cfg.p), B92_OK);
  Session s;
  ASSERT_EQ(b92_session_run(cfg.p, &s.p), B92_OK);
  char* raw = nullptr;
  ASSERT_EQ(b92_session_stats_csv(s.p, &raw), B92_OK);
  const std::string csv = Take(raw);
  EXPECT_EQ(csv.rfind("axis_value,trial,seed,", 0), 0u);
  EXPECT_NE(csv.find(",0,2026,20000,"), std::string::npos);

  ASSERT_EQ(b92_session_key(s.p, 0, &raw), B92_OK);
  const std::string alice = Take(raw);
  ASSERT_EQ(b92_session_key(s.p, 1, &raw), B92_OK);
  const std::string bob = Take(raw);
  EXPECT_FALSE(alice.empty());
  EXPECT_EQ(alice, bob);  // ideal detectors, no errors
  EXPECT_EQ(b92_session_key(s.p, 2, &raw), B92_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(b92_session_records_csv(s.p, &raw), B92_OK);
  EXPECT_EQ(Take(raw).rfind("index,alice_bit,", 0), 0u);
  ASSERT_EQ(b92_session_summary(s.p, &raw), B92_OK);
  EXPECT_NE(Take(raw).find("QBER 0"), std::string::npos);
}

TEST(CApi, SeedResolution) {
  Config cfg;
  ASSERT_EQ(b92_config_load(DataPath("ideal.json").c_str(), &cfg.p), B92_OK);
  std::uint64_t seed = 0;
  ::unsetenv("QKD_SIM_SEED");
  ASSERT_EQ(b92_config_resolve_seed(cfg.p, 0, 0), B92_OK);
  b92_config_get_seed(cfg.p, &seed);
  EXPECT_EQ(seed, 2026u);

  ::setenv("QKD_SIM_SEED", "31", 1);
  ASSERT_EQ(b92_config_resolve_seed(cfg.p, 0, 0), B92_OK);
  b92_config_get_seed(cfg.p, &seed);
  EXPECT_EQ(seed, 31u);
  ASSERT_EQ(b92_config_resolve_seed(cfg.p, 1, 99), B92_OK);
  b92_config_get_seed(cfg.p, &seed);
  EXPECT_EQ(seed, 99u);

  ::setenv("QKD_SIM_SEED", "abc", 1);
  EXPECT_EQ(b92_config_resolve_seed(cfg.p, 0, 0), B92_ERR_VALIDATION);
  EXPECT_NE(std::strstr(b92_last_error(), "QKD_SIM_SEED"), nullptr);
  ::unsetenv("QKD_SIM_SEED");
}

TEST(CApi, EveToggleRestoresStrategy) {
  Config cfg;
  ASSERT_EQ(b92_config_load(DataPath("pns.json").c_str(), &cfg.p), B92_OK);
  Session with;
  ASSERT_EQ(b92_session_run(cfg.p, &with.p), B92_OK);
  b92_stats a{};
  b92_session_stats(with.p, &a);
  EXPECT_TRUE(a.has_eve_known_fraction);

  ASSERT_EQ(b92_config_set_eve_enabled(cfg.p, 0), B92_OK);
  Session without;
  ASSERT_EQ(b92_session_run(cfg.p, &without.p), B92_OK);
  b92_stats b{};
  b92_session_stats(without.p, &b);
  EXPECT_FALSE(b.has_eve_known_fraction);
  EXPECT_DOUBLE_EQ(a.bob_click_rate_no_eve_ref, b.sift_rate);

  ASSERT_EQ(b92_config_set_eve_enabled(cfg.p, 1), B92_OK);
  char* json = nullptr;
  ASSERT_EQ(b92_config_to_json(cfg.p, &json), B92_OK);
  EXPECT_NE(Take(json).find("\"enabled\": true"), std::string::npos);
}

TEST(CApi, Sweep) {
  Config cfg;
  ASSERT_EQ(b92_config_load(DataPath("ideal.json").c_str(), &cfg.p), B92_OK);
  const double values[] = {0.0, 50.0};
  Table t;
  ASSERT_EQ(b92_sweep_run(cfg.p, "length_km", values, 2, 2, 0, &t.p), B92_OK);
  std::size_t n = 0;
  ASSERT_EQ(b92_table_size(t.p, &n), B92_OK);
  EXPECT_EQ(n, 4u);
  b92_stats near{}, far{};
  ASSERT_EQ(b92_table_row_stats(t.p, 0, &near), B92_OK);
  ASSERT_EQ(b92_table_row_stats(t.p, 2, &far), B92_OK);
  EXPECT_GT(near.sift_rate, far.sift_rate);
  EXPECT_EQ(b92_table_row_stats(t.p, 4, &far), B92_ERR_INVALID_ARGUMENT);
  char* raw = nullptr;
  ASSERT_EQ(b92_table_csv(t.p, &raw), B92_OK);
  const std::string csv = Take(raw);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  ASSERT_EQ(b92_table_summary(t.p, &raw), B92_OK);
  EXPECT_NE(Take(raw).find("value 50 trial 1"), std::string::npos);

  b92_table* bad = nullptr;
  EXPECT_EQ(b92_sweep_run(cfg.p, "colour", values, 2, 1, 0, &bad),
            B92_ERR_VALIDATION);
  EXPECT_EQ(b92_sweep_run(cfg.p, "mu", values, 0, 1, 0, &bad),
            B92_ERR_VALIDATION);
}

TEST(CApi, Table1Replay) {
  char* report = nullptr;
  ASSERT_EQ(b92_table1_replay(&report), B92_OK);
  const std::string text = Take(report);
  EXPECT_NE(text.find("click       Y N Y N N N Y N"), std::string::npos);
  EXPECT_NE(text.find("sifted key 011 at positions 1 3 7"), std::string::npos);
}

}  // namespace
