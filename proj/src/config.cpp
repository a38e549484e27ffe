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

#include "b92/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace b92 {
namespace {

using nlohmann::json;

void Check(std::vector<ConfigIssue>& out, bool ok, std::string key,
           std::string message) {
  if (!ok) out.push_back({std::move(key), std::move(message)});
}

bool InClosedUnit(double v) { return v >= 0.0 && v <= 1.0; }
bool InOpenUnit(double v) { return v > 0.0 && v < 1.0; }
bool NonNegative(double v) { return v >= 0.0 && std::isfinite(v); }

// Reads keys from one JSON object, recording type errors and leftovers.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string prefix,
               std::vector<ConfigIssue>& issues)
      : obj_(obj), prefix_(std::move(prefix)), issues_(issues) {}

  ~ObjectReader() {
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.contains(key)) {
        issues_.push_back({prefix_ + key, "unknown key"});
      }
    }
  }

  std::string Key(const std::string& key) const { return prefix_ + key; }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  void Number(const std::string& key, double& out) {
    if (const json* v = Find(key)) {
      if (v->is_number()) {
        out = v->get<double>();
      } else {
        issues_.push_back({Key(key), "must be a number"});
      }
    }
  }

  // null is accepted as infinity.
  void NumberOrInfinity(const std::string& key, double& out) {
    if (const json* v = Find(key)) {
      if (v->is_null()) {
        out = std::numeric_limits<double>::infinity();
      } else if (v->is_number()) {
        out = v->get<double>();
      } else {
        issues_.push_back({Key(key), "must be a number or null"});
      }
    }
  }

  void Unsigned(const std::string& key, std::uint64_t& out) {
    if (const json* v = Find(key)) {
      if (v->is_number_unsigned()) {
        out = v->get<std::uint64_t>();
      } else {
        issues_.push_back({Key(key), "must be a non-negative integer"});
      }
    }
  }

  void Bool(const std::string& key, bool& out) {
    if (const json* v = Find(key)) {
      if (v->is_boolean()) {
        out = v->get<bool>();
      } else {
        issues_.push_back({Key(key), "must be true or false"});
      }
    }
  }

  const json* Object(const std::string& key) {
    const json* v = Find(key);
    if (v && !v->is_object()) {
      issues_.push_back({Key(key), "must be an object"});
      return nullptr;
    }
    return v;
  }

 private:
  const json& obj_;
  std::string prefix_;
  std::vector<ConfigIssue>& issues_;
  std::set<std::string> seen_;
};

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kTextbook ? "textbook" : "stochastic";
}

std::string FormatIssues(const std::vector<ConfigIssue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << '\n';
    os << issues[i].key << ": " << issues[i].message;
  }
  return os.str();
}

ValidationError::ValidationError(std::vector<ConfigIssue> issues)
    : std::runtime_error("invalid configuration:\n" + FormatIssues(issues)),
      issues_(std::move(issues)) {}

ValidationError::ValidationError(std::string key, std::string message)
    : ValidationError(std::vector<ConfigIssue>{
          {std::move(key), std::move(message)}}) {}

IoError::IoError(const std::filesystem::path& path, const std::string& what)
    : std::runtime_error(path.string() + ": " + what), path_(path) {}

std::vector<ConfigIssue> Validate(const SessionConfig& cfg) {
  std::vector<ConfigIssue> out;
  Check(out, cfg.n_pulses >= 1, "n_pulses", "must be >= 1");
  Check(out, NonNegative(cfg.mu), "mu", "must be finite and >= 0");
  Check(out, InOpenUnit(cfg.split_ratio_alice), "split_ratio_alice",
        "must lie in (0, 1)");
  Check(out, InOpenUnit(cfg.split_ratio_bob), "split_ratio_bob",
        "must lie in (0, 1)");
  Check(out, cfg.time_bin_dt > 0.0 && std::isfinite(cfg.time_bin_dt),
        "time_bin_dt", "must be finite and > 0");

  const ChannelParams& ch = cfg.channel;
  Check(out, NonNegative(ch.length_km), "channel.length_km",
        "must be finite and >= 0");
  Check(out, NonNegative(ch.attenuation_db_per_km),
        "channel.attenuation_db_per_km", "must be finite and >= 0");
  Check(out, NonNegative(ch.background_mu), "channel.background_mu",
        "must be finite and >= 0");
  Check(out, ch.coherence_length_km > 0.0, "channel.coherence_length_km",
        "must be > 0 (null for infinite)");

  Check(out, InClosedUnit(cfg.detector.efficiency), "detector.efficiency",
        "must lie in [0, 1]");
  Check(out, InClosedUnit(cfg.detector.dark_count_prob),
        "detector.dark_count_prob", "must lie in [0, 1]");

  if (cfg.eve) {
    Check(out, cfg.eve->store_count >= 1, "eve.store_count", "must be >= 1");
    Check(out, InClosedUnit(cfg.eve->block_singles_prob),
          "eve.block_singles_prob", "must lie in [0, 1]");
  }

  if (cfg.fixture_bits) {
    Check(out, cfg.fixture_bits->size() == cfg.n_pulses, "fixture_bits",
          "length must equal n_pulses");
    bool binary = true;
    for (int b : *cfg.fixture_bits) binary = binary && (b == 0 || b == 1);
    Check(out, binary, "fixture_bits", "entries must be 0 or 1");
  }
  if (cfg.fixture_phases_deg) {
    Check(out, cfg.fixture_phases_deg->size() == cfg.n_pulses,
          "fixture_phases", "length must equal n_pulses");
    bool basis = true;
    for (double d : *cfg.fixture_phases_deg) {
      const Phase p = Phase::FromDegrees(d);
      basis = basis && (p == Phase::Zero() || p == Phase::Pi());
    }
    Check(out, basis, "fixture_phases", "entries must be 0 or 180 degrees");
  }
  return out;
}

void ValidateOrThrow(const SessionConfig& cfg) {
  auto issues = Validate(cfg);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

SessionConfig ParseConfigJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("<document>",
                          std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("<document>", "top level must be an object");
  }

  SessionConfig cfg;
  std::vector<ConfigIssue> issues;
  {
    ObjectReader top(doc, "", issues);
    top.Unsigned("n_pulses", cfg.n_pulses);
    top.Number("mu", cfg.mu);
    top.Unsigned("seed", cfg.seed);
    top.Number("split_ratio_alice", cfg.split_ratio_alice);
    top.Number("split_ratio_bob", cfg.split_ratio_bob);
    top.Number("time_bin_dt", cfg.time_bin_dt);

    if (const json* mode = top.Find("mode")) {
      if (*mode == "textbook") {
        cfg.mode = Mode::kTextbook;
      } else if (*mode == "stochastic") {
        cfg.mode = Mode::kStochastic;
      } else {
        issues.push_back({"mode", "must be \"textbook\" or \"stochastic\""});
      }
    }

    if (const json* ch = top.Object("channel")) {
      ObjectReader r(*ch, "channel.", issues);
      r.Number("length_km", cfg.channel.length_km);
      r.Number("attenuation_db_per_km", cfg.channel.attenuation_db_per_km);
      r.Number("background_mu", cfg.channel.background_mu);
      r.NumberOrInfinity("coherence_length_km",
                         cfg.channel.coherence_length_km);
    }
    if (const json* det = top.Object("detector")) {
      ObjectReader r(*det, "detector.", issues);
      r.Number("efficiency", cfg.detector.efficiency);
      r.Number("dark_count_prob", cfg.detector.dark_count_prob);
    }
    if (const json* eve = top.Object("eve")) {
      ObjectReader r(*eve, "eve.", issues);
      bool enabled = false;
      PnsStrategy strategy;
      r.Bool("enabled", enabled);
      r.Unsigned("store_count", strategy.store_count);
      r.Number("block_singles_prob", strategy.block_singles_prob);
      r.Bool("lossless_forward", strategy.lossless_forward);
      if (enabled) cfg.eve = strategy;
    }

    if (const json* fixture = top.Find("fixture")) {
      if (*fixture == "table1") {
        const SessionConfig t = Table1Config();
        cfg.mode = Mode::kTextbook;
        cfg.n_pulses = t.n_pulses;
        cfg.fixture_bits = t.fixture_bits;
        cfg.fixture_phases_deg = t.fixture_phases_deg;
      } else {
        issues.push_back({"fixture", "only \"table1\" is built in"});
      }
    }
    if (const json* bits = top.Find("fixture_bits")) {
      if (bits->is_array() &&
          std::all_of(bits->begin(), bits->end(),
                      [](const json& b) { return b.is_number_integer(); })) {
        cfg.fixture_bits = bits->get<std::vector<int>>();
      } else {
        issues.push_back({"fixture_bits", "must be an array of integers"});
      }
    }
    if (const json* phases = top.Find("fixture_phases")) {
      if (phases->is_array() &&
          std::all_of(phases->begin(), phases->end(),
                      [](const json& p) { return p.is_number(); })) {
        cfg.fixture_phases_deg = phases->get<std::vector<double>>();
      } else {
        issues.push_back({"fixture_phases", "must be an array of numbers"});
      }
    }
  }

  if (issues.empty()) {
    issues = Validate(cfg);
  } else {
    // Type errors first; constraint checks only on keys that parsed.
    for (auto& issue : Validate(cfg)) issues.push_back(std::move(issue));
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return cfg;
}

SessionConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return ParseConfigJson(buf.str());
}

std::string ConfigToJson(const SessionConfig& cfg) {
  json doc;
  doc["n_pulses"] = cfg.n_pulses;
  doc["mu"] = cfg.mu;
  doc["mode"] = std::string(ModeName(cfg.mode));
  doc["seed"] = cfg.seed;
  doc["split_ratio_alice"] = cfg.split_ratio_alice;
  doc["split_ratio_bob"] = cfg.split_ratio_bob;
  doc["time_bin_dt"] = cfg.time_bin_dt;
  doc["channel"] = {
      {"length_km", cfg.channel.length_km},
      {"attenuation_db_per_km", cfg.channel.attenuation_db_per_km},
      {"background_mu", cfg.channel.background_mu},
  };
  if (std::isinf(cfg.channel.coherence_length_km)) {
    doc["channel"]["coherence_length_km"] = nullptr;
  } else {
    doc["channel"]["coherence_length_km"] = cfg.channel.coherence_length_km;
  }
  doc["detector"] = {{"efficiency", cfg.detector.efficiency},
                     {"dark_count_prob", cfg.detector.dark_count_prob}};
  const PnsStrategy eve = cfg.eve.value_or(PnsStrategy{});
  doc["eve"] = {{"enabled", cfg.eve.has_value()},
                {"store_count", eve.store_count},
                {"block_singles_prob", eve.block_singles_prob},
                {"lossless_forward", eve.lossless_forward}};
  if (cfg.fixture_bits) doc["fixture_bits"] = *cfg.fixture_bits;
  if (cfg.fixture_phases_deg) doc["fixture_phases"] = *cfg.fixture_phases_deg;
  return doc.dump(2) + "\n";
}

SessionConfig Table1Config() {
  SessionConfig cfg;
  cfg.mode = Mode::kTextbook;
  cfg.n_pulses = std::size(kTable1Bits);
  cfg.mu = 1.0;
  cfg.fixture_bits.emplace(std::begin(kTable1Bits), std::end(kTable1Bits));
  cfg.fixture_phases_deg.emplace(std::begin(kTable1BobPhasesDeg),
                                 std::end(kTable1BobPhasesDeg));
  return cfg;
}

}  // namespace b92
