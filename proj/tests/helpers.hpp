#pragma once

// Shared fixtures for the test suites: hand-built tick series with
// closed-form spectra, and seeded random series.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "liqspec/synth.hpp"
#include "liqspec/tick.hpp"

namespace testutil {

inline bool approx_rel(double a, double b, double tol) {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * std::max(scale, 1e-300);
}

inline bool approx_abs(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

// Two price levels with exact per-level dwell and volume; the pencil
// eigenvalues are exactly {v_a/t_a, v_b/t_b} with eigenfunctions vanishing at
// the other price.
struct TwoLevel {
  double price_a, price_b;
  double time_a_s, time_b_s;
  std::int64_t volume_a, volume_b;
  double rate_a() const { return volume_a / time_a_s; }
  double rate_b() const { return volume_b / time_b_s; }
};

inline liqspec::TickSeries make_two_level(const TwoLevel& cfg, int trades_per_level = 50) {
  liqspec::RateProfile profile;
  auto level = [&](double price, double time_s, std::int64_t volume) {
    liqspec::RateLevel lv;
    lv.price_micro = static_cast<std::int64_t>(std::llround(price * 1e6));
    lv.spacing_s = time_s / trades_per_level;
    lv.size = volume / trades_per_level;
    lv.dwell_s = time_s;
    lv.rate = static_cast<double>(lv.size) / lv.spacing_s;
    return lv;
  };
  profile.levels.push_back(level(cfg.price_a, cfg.time_a_s, cfg.volume_a));
  profile.levels.push_back(level(cfg.price_b, cfg.time_b_s, cfg.volume_b));
  return liqspec::generate(profile);
}

// Multi-level profile used where overlapping eigenstates are needed (more
// levels than basis dimension).
inline liqspec::RateProfile make_multi_level_profile(
    const std::vector<double>& prices, const std::vector<double>& rates,
    const std::vector<std::int64_t>& sizes, double dwell_s, bool jitter = false,
    std::uint64_t seed = 7) {
  liqspec::RateProfile profile;
  profile.jitter = jitter;
  profile.seed = seed;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    liqspec::RateLevel lv;
    lv.price_micro = static_cast<std::int64_t>(std::llround(prices[i] * 1e6));
    lv.size = sizes[i];
    lv.rate = rates[i];
    lv.spacing_s = static_cast<double>(sizes[i]) / rates[i];
    lv.dwell_s = dwell_s;
    profile.levels.push_back(lv);
  }
  return profile;
}

// Random-walk series over a few hundred distinct price levels.
inline liqspec::TickSeries random_series(std::size_t ticks, std::uint64_t seed,
                                         double mid_price = 700.0,
                                         double half_range = 5.0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dt_ns(0, 40'000'000);
  std::uniform_int_distribution<std::int64_t> dv(0, 400);
  std::uniform_real_distribution<double> walk(-1.0, 1.0);

  liqspec::TickSeries series;
  std::int64_t t = 34'200'000'000'000;
  std::int64_t volume = 0;
  double price = mid_price;
  for (std::size_t i = 0; i < ticks; ++i) {
    t += dt_ns(rng);
    volume += dv(rng);
    price += walk(rng) * half_range * 0.05;
    price = std::min(std::max(price, mid_price - half_range), mid_price + half_range);
    std::int64_t p_micro = static_cast<std::int64_t>(std::llround(price * 100.0)) * 10'000;
    series.ticks.push_back({t, p_micro, volume});
  }
  series.session_start_ns = series.ticks.front().t_ns;
  series.session_end_ns = series.ticks.back().t_ns;
  series.validate();
  return series;
}

}  // namespace testutil
