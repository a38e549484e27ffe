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

#include "b92/adversary.hpp"

#include <algorithm>
#include <stdexcept>

namespace b92 {

InterceptResult Intercept(std::uint64_t n, const PnsStrategy& strategy,
                          RngStream& rng) {
  InterceptResult r;
  if (n == 0) return r;
  if (n == 1) {
    const double p = strategy.block_singles_prob;
    r.blocked = p >= 1.0 || (p > 0.0 && rng.Bernoulli(p));
    r.forwarded = r.blocked ? 0 : 1;
    return r;
  }
  r.stored = std::min(strategy.store_count, n - 1);
  r.forwarded = n - r.stored;
  return r;
}

double Learn(EveLedger& ledger, std::span<const std::uint64_t> sifted_positions,
             std::span<const int> alice_bits) {
  if (sifted_positions.size() != alice_bits.size()) {
    throw std::invalid_argument("sifted positions and bits differ in length");
  }
  if (sifted_positions.empty()) {
    throw std::domain_error("empty sifted key: known fraction undefined");
  }
  ledger.known_bits.clear();
  for (std::size_t i = 0; i < sifted_positions.size(); ++i) {
    const auto it = ledger.stored.find(sifted_positions[i]);
    if (it != ledger.stored.end() && it->second >= 1) {
      ledger.known_bits[sifted_positions[i]] = alice_bits[i];
    }
  }
  return static_cast<double>(ledger.known_bits.size()) /
         static_cast<double>(sifted_positions.size());
}

}  // namespace b92
