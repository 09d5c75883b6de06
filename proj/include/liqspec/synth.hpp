#pragma once

// Synthetic tick generator with known ground truth: each level dwells at one
// price and trades `size` shares every `spacing` seconds, so its realized
// matching rate is size/spacing, exactly, in deterministic mode. The
// downstream solve must recover those rates as eigenvalues.

#include <cstdint>
#include <string>
#include <vector>

#include "liqspec/tick.hpp"

namespace liqspec {

struct RateLevel {
  std::int64_t price_micro = 0;
  double rate = 0.0;       // shares/second, == size / spacing
  double dwell_s = 0.0;    // time spent at this level
  double spacing_s = 0.0;  // time between trades
  std::int64_t size = 0;   // shares per trade
};

struct RateProfile {
  std::vector<RateLevel> levels;
  std::uint64_t seed = 0;
  std::int64_t start_ns = 34'200'000'000'000;  // 09:30
  // Deterministic spacing by default; jitter scales each spacing by a seeded
  // uniform factor in [0.5, 1.5] for robustness tests.
  bool jitter = false;
};

// Throws std::invalid_argument when the profile violates its invariants
// (empty, non-positive fields, rate * spacing != size).
void validate(const RateProfile& profile);

// Emits one baseline row (v = 0) followed by one row per trade. Deterministic
// given the profile; the seed only matters in jitter mode.
TickSeries generate(const RateProfile& profile);

// Profile JSON: {"seed": n, "start_time": "HH:MM[:SS]", "jitter": bool,
//                "levels": [{"price": x, "rate": r, "dwell": s, "spacing": s,
//                            "size": n}, ...]}
RateProfile profile_from_json(const std::string& text);
RateProfile profile_from_file(const std::string& path);

}  // namespace liqspec
