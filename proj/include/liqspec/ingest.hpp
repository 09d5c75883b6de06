#pragma once

// CSV tick ingestion: delimiter-separated rows carrying (time, price,
// cumulative volume) in configurable columns, with an optional session
// window. Produces an immutable TickSeries.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "liqspec/tick.hpp"

namespace liqspec {

struct ParseOptions {
  int t_col = 0;
  int p_col = 1;
  int v_col = 2;
  char delimiter = ',';
  std::optional<std::int64_t> from_ns;  // session window, inclusive
  std::optional<std::int64_t> to_ns;
  bool lenient = false;  // skip malformed rows instead of failing
};

struct ParseStats {
  std::size_t rows_read = 0;       // data rows seen (header excluded)
  std::size_t rows_dropped = 0;    // valid rows outside the session window
  std::size_t rows_malformed = 0;  // skipped rows (lenient mode only)
  bool header_skipped = false;
};

struct ParseResult {
  TickSeries series;
  ParseStats stats;
};

// Parses CSV content. Time and cumulative volume must be non-decreasing over
// the whole stream; violations are hard errors naming the offending line.
// When a session window drops leading rows, the last dropped row becomes the
// differencing baseline (time clamped to the window) so the first in-window
// tick keeps its true (dt, dv) increment.
ParseResult parse_ticks(std::string_view content, const ParseOptions& opts = {});

// Reads the file and parses it. Throws ParseError if unreadable.
ParseResult parse_ticks_file(const std::string& path, const ParseOptions& opts = {});

// Canonical "t,p,v" rendering; parse_ticks(serialize_ticks(s)) == s for any
// valid unfiltered series.
std::string serialize_ticks(const TickSeries& series);

}  // namespace liqspec
