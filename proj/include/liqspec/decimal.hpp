#pragma once

// Fixed-point decimal helpers. Prices travel through the pipeline as integer
// micro-units (1e-6 of a currency unit) so that CSV prices like 700.05 stay
// exact until basis evaluation, and histogram binning can be done in integer
// arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace liqspec {

inline constexpr std::int64_t kPriceScale = 1'000'000;  // micro-units per 1.0

// Parses a non-negative decimal literal ("700.05", "7", ".25") into
// micro-units. At most 6 fractional digits. Returns nullopt on malformed
// input or overflow.
std::optional<std::int64_t> parse_decimal_micro(std::string_view text);

// Minimal exact decimal rendering of a micro-unit value ("700.05", "7").
std::string format_micro(std::int64_t micro);

inline double micro_to_double(std::int64_t micro) {
  return static_cast<double>(micro) * 1e-6;
}

// Parses "HH:MM" or "HH:MM:SS" into nanoseconds since midnight.
// Accepts 0 <= HH <= 24. Returns nullopt on malformed input.
std::optional<std::int64_t> parse_time_of_day_ns(std::string_view text);

// printf "%.17g" — full-precision, locale-independent float rendering for
// report files.
std::string fmt_g17(double v);

}  // namespace liqspec
