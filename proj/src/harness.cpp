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

#include "b92/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "b92/rng.hpp"

namespace b92 {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t ParseCount(std::string_view field, const char* column) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument(std::string("bad integer in column ") + column);
  }
  return v;
}

double ParseDouble(std::string_view field, const char* column) {
  double v = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::invalid_argument(std::string("bad number in column ") + column);
  }
  return v;
}

std::optional<double> ParseOptional(std::string_view field,
                                    const char* column) {
  if (field.empty()) return std::nullopt;
  return ParseDouble(field, column);
}

std::string Optional(const std::optional<double>& v) {
  return v ? FormatFraction(*v) : std::string();
}

}  // namespace

SweepAxis ParseSweepAxis(std::string_view name) {
  if (name == "length_km") return SweepAxis::kLengthKm;
  if (name == "mu") return SweepAxis::kMu;
  throw ValidationError("axis", "must be length_km or mu");
}

std::string_view SweepAxisName(SweepAxis axis) {
  return axis == SweepAxis::kLengthKm ? "length_km" : "mu";
}

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::size_t value_index,
                         std::uint32_t trial) {
  std::uint64_t h = SplitMix64(base_seed);
  h = SplitMix64(h ^ (static_cast<std::uint64_t>(value_index) + 1) *
                         0xC2B2AE3D27D4EB4FULL);
  h = SplitMix64(h ^ (static_cast<std::uint64_t>(trial) + 1) *
                         0x165667B19E3779F9ULL);
  return h;
}

std::vector<StatsRow> Sweep(const SessionConfig& base, SweepAxis axis,
                            std::span<const double> values,
                            std::uint32_t trials, unsigned threads) {
  std::vector<ConfigIssue> issues;
  if (values.empty()) issues.push_back({"values", "must not be empty"});
  if (trials == 0) issues.push_back({"trials", "must be >= 1"});
  for (auto& issue : Validate(base)) issues.push_back(std::move(issue));

  std::vector<SessionConfig> points;
  std::vector<StatsRow> rows;
  for (std::size_t v = 0; v < values.size(); ++v) {
    for (std::uint32_t t = 0; t < trials; ++t) {
      SessionConfig cfg = base;
      if (axis == SweepAxis::kLengthKm) {
        cfg.channel.length_km = values[v];
      } else {
        cfg.mu = values[v];
      }
      cfg.seed = DeriveSeed(base.seed, v, t);
      if (t == 0) {
        for (auto& issue : Validate(cfg)) {
          issue.message += " (sweep value " + FormatFraction(values[v]) + ")";
          issues.push_back(std::move(issue));
        }
      }
      StatsRow row;
      row.axis_value = values[v];
      row.trial = t;
      row.seed = cfg.seed;
      rows.push_back(row);
      points.push_back(std::move(cfg));
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(points.size());
  const auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i].stats = RunSession(points[i]).stats;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

StatsRow RowForRun(const SessionConfig& cfg, const SessionStats& stats) {
  StatsRow row;
  row.seed = cfg.seed;
  row.stats = stats;
  return row;
}

std::string FormatFraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string FormatStatsCsv(std::span<const StatsRow> rows) {
  std::ostringstream os;
  os << kStatsCsvHeader << '\n';
  for (const StatsRow& r : rows) {
    const SessionStats& s = r.stats;
    os << Optional(r.axis_value) << ',' << r.trial << ',' << r.seed << ','
       << s.sent << ',' << s.clicks_t1 << ',' << s.clicks_t2 << ','
       << s.clicks_t3 << ',' << s.double_clicks << ',' << s.sifted_len << ','
       << FormatFraction(s.sift_rate) << ',' << Optional(s.qber) << ','
       << Optional(s.eve_known_fraction) << ','
       << FormatFraction(s.bob_click_rate_no_eve_ref) << '\n';
  }
  return os.str();
}

std::vector<StatsRow> ParseStatsCsv(std::string_view text) {
  std::vector<StatsRow> rows;
  bool header = true;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view()
                                        : text.substr(nl + 1);
    if (header) {
      if (line != kStatsCsvHeader) {
        throw std::invalid_argument("unexpected stats CSV header");
      }
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitFields(line);
    if (f.size() != 13) {
      throw std::invalid_argument("stats CSV row must have 13 fields");
    }
    StatsRow r;
    r.axis_value = ParseOptional(f[0], "axis_value");
    r.trial = static_cast<std::uint32_t>(ParseCount(f[1], "trial"));
    r.seed = ParseCount(f[2], "seed");
    SessionStats& s = r.stats;
    s.sent = ParseCount(f[3], "sent");
    s.clicks_t1 = ParseCount(f[4], "clicks_t1");
    s.clicks_t2 = ParseCount(f[5], "clicks_t2");
    s.clicks_t3 = ParseCount(f[6], "clicks_t3");
    s.double_clicks = ParseCount(f[7], "double_clicks");
    s.sifted_len = ParseCount(f[8], "sifted_len");
    s.sift_rate = ParseDouble(f[9], "sift_rate");
    s.qber = ParseOptional(f[10], "qber");
    s.eve_known_fraction = ParseOptional(f[11], "eve_known_fraction");
    s.bob_click_rate_no_eve_ref =
        ParseDouble(f[12], "bob_click_rate_no_eve_ref");
    rows.push_back(r);
  }
  if (header) throw std::invalid_argument("empty stats CSV");
  return rows;
}

std::string FormatRecordsCsv(std::span<const PulseRecord> records) {
  std::ostringstream os;
  os << "index,alice_bit,alice_phase_deg,bob_phase_deg,n_source,eve_stored,"
        "n_arrived,t1,t2,t3,click,bob_bit\n";
  const auto yn = [](bool b) { return b ? 'Y' : 'N'; };
  for (const PulseRecord& r : records) {
    os << r.index << ',' << r.alice_bit << ','
       << FormatFraction(r.alice_phase.degrees()) << ','
       << FormatFraction(r.bob_phase.degrees()) << ',' << r.n_source << ','
       << r.eve_stored << ',' << r.n_arrived << ',' << yn(r.clicks.t1) << ','
       << yn(r.clicks.t2) << ',' << yn(r.clicks.t3) << ','
       << yn(r.conclusive()) << ',';
    if (r.outcome) os << *r.outcome;
    os << '\n';
  }
  return os.str();
}

std::string FormatSummary(std::span<const StatsRow> rows) {
  std::ostringstream os;
  for (const StatsRow& r : rows) {
    const SessionStats& s = r.stats;
    if (r.axis_value) {
      os << "value " << FormatFraction(*r.axis_value) << " trial " << r.trial
         << ": ";
    }
    os << "sent " << s.sent << ", sifted " << s.sifted_len << " (rate "
       << FormatFraction(s.sift_rate) << "), QBER "
       << (s.qber ? FormatFraction(*s.qber) : std::string("n/a"));
    if (s.eve_known_fraction) {
      os << ", Eve knows " << FormatFraction(*s.eve_known_fraction);
    }
    os << ", Bob t2 click rate " << FormatFraction(s.sift_rate)
       << " (no-Eve reference " << FormatFraction(s.bob_click_rate_no_eve_ref)
       << ")\n";
  }
  return os.str();
}

std::uint64_t ResolveSeed(std::optional<std::uint64_t> cli_seed,
                          const char* env_value, std::uint64_t config_seed) {
  if (cli_seed) return *cli_seed;
  if (env_value && *env_value) {
    const std::string_view s(env_value);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ValidationError(kSeedEnvVar, "must be an unsigned 64-bit integer");
    }
    return v;
  }
  return config_seed;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError(path, "write failed");
}

Table1Replay ReplayTable1() {
  Table1Replay out;
  out.result = RunSession(Table1Config());
  const auto& records = out.result.records;

  static constexpr char kExpectedClicks[] = "YNYNNNYN";
  static constexpr int kExpectedKey[] = {0, 1, 1};
  static constexpr std::uint64_t kExpectedPositions[] = {1, 3, 7};

  std::ostringstream os;
  std::string clicks;
  os << "pulse      ";
  for (const auto& r : records) os << ' ' << r.index;
  os << "\nAlice bit  ";
  for (const auto& r : records) os << ' ' << r.alice_bit;
  os << "\nAlice phase";
  for (const auto& r : records) os << ' ' << FormatFraction(r.alice_phase.degrees());
  os << "\nBob basis  ";
  for (const auto& r : records) os << ' ' << FormatFraction(r.bob_phase.degrees());
  os << "\nclick      ";
  for (const auto& r : records) {
    clicks.push_back(r.clicks.t2 ? 'Y' : 'N');
    os << ' ' << clicks.back();
  }
  os << "\nBob bit    ";
  for (const auto& r : records) {
    os << ' ';
    if (r.outcome) {
      os << *r.outcome;
    } else {
      os << '-';
    }
  }
  const SiftedKey& key = out.result.keys.bob;
  std::string key_text;
  for (int b : key.bits) key_text += static_cast<char>('0' + b);
  os << "\nsifted key " << key_text << " at positions";
  for (auto p : key.positions) os << ' ' << p;
  os << '\n';

  out.matches =
      clicks == kExpectedClicks &&
      std::ranges::equal(key.bits, kExpectedKey) &&
      std::ranges::equal(key.positions, kExpectedPositions) &&
      std::ranges::equal(out.result.keys.alice.bits, kExpectedKey);
  os << (out.matches ? "MATCH" : "MISMATCH") << ": expected key 011 at 1 3 7\n";
  out.report = os.str();
  return out;
}

}  // namespace b92
