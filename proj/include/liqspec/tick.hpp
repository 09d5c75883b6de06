#pragma once

// Canonical executed-trade tick sequence. One tick is (time, traded price,
// cumulative volume). All measures are built from the per-tick increments
// (dt, dv), so the first tick of a series is the differencing baseline: it
// contributes nothing itself.

#include <cstdint>
#include <vector>

#include "liqspec/decimal.hpp"

namespace liqspec {

struct Tick {
  std::int64_t t_ns;     // nanoseconds since midnight
  std::int64_t p_micro;  // trade price in 1e-6 currency units, > 0
  std::int64_t volume;   // cumulative shares since session start, >= 0

  double price() const { return micro_to_double(p_micro); }
  double time_s() const { return static_cast<double>(t_ns) * 1e-9; }

  bool operator==(const Tick&) const = default;
};

struct TickSeries {
  std::vector<Tick> ticks;         // ticks[0] is the differencing baseline
  std::int64_t session_start_ns = 0;
  std::int64_t session_end_ns = 0;

  std::size_t size() const { return ticks.size(); }
  // Number of (dt, dv) increments feeding the measures.
  std::size_t increments() const { return ticks.empty() ? 0 : ticks.size() - 1; }

  // Exact shares traded over the measured increments.
  std::int64_t total_volume() const {
    return ticks.empty() ? 0 : ticks.back().volume - ticks.front().volume;
  }
  double total_time_s() const {
    return ticks.empty() ? 0.0
                         : static_cast<double>(ticks.back().t_ns - ticks.front().t_ns) * 1e-9;
  }

  // Price range of the measure support (ticks after the baseline).
  std::int64_t min_price_micro() const;
  std::int64_t max_price_micro() const;

  // Throws std::invalid_argument on any violated invariant (ordering,
  // positivity, minimum length, session containment).
  void validate() const;

  bool operator==(const TickSeries&) const = default;
};

}  // namespace liqspec
