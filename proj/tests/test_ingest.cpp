#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "liqspec/errors.hpp"
#include "liqspec/ingest.hpp"

using namespace liqspec;

TEST_CASE("two rows parse and difference") {
  auto result = parse_ticks("34200000000000,700.00,100\n34200000001000,700.05,250");
  const auto& ticks = result.series.ticks;
  REQUIRE(ticks.size() == 2);
  CHECK(ticks[0].t_ns == 34'200'000'000'000);
  CHECK(ticks[0].p_micro == 700'000'000);
  CHECK(ticks[1].p_micro == 700'050'000);
  CHECK(ticks[1].volume - ticks[0].volume == 150);
  CHECK(result.series.total_volume() == 150);
  CHECK(result.stats.rows_read == 2);
}

TEST_CASE("decreasing cumulative volume names the row") {
  const char* csv =
      "1000,10.00,100\n"
      "2000,10.00,200\n"
      "3000,10.00,150\n";
  try {
    parse_ticks(csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 3);
    CHECK(std::string(e.what()).find("volume") != std::string::npos);
  }
}

TEST_CASE("decreasing time names the row") {
  try {
    parse_ticks("2000,10.00,100\n1000,10.00,200\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);
  }
}

TEST_CASE("malformed row: hard error unless lenient") {
  const char* csv =
      "1000,10.00,100\n"
      "2000,not_a_price,150\n"
      "3000,10.05,200\n";
  CHECK_THROWS_AS(parse_ticks(csv), ParseError);

  ParseOptions opts;
  opts.lenient = true;
  auto result = parse_ticks(csv, opts);
  CHECK(result.series.ticks.size() == 2);
  CHECK(result.stats.rows_malformed == 1);
}

TEST_CASE("header row is skipped") {
  auto result = parse_ticks("time,price,volume\n1000,10.00,100\n2000,10.05,250\n");
  CHECK(result.stats.header_skipped);
  CHECK(result.series.ticks.size() == 2);
}

TEST_CASE("column layout and delimiter") {
  ParseOptions opts;
  opts.delimiter = ';';
  opts.t_col = 1;
  opts.p_col = 3;
  opts.v_col = 0;
  auto result = parse_ticks("100;1000;x;10.00\n250;2000;y;10.05\n", opts);
  REQUIRE(result.series.ticks.size() == 2);
  CHECK(result.series.ticks[1].t_ns == 2000);
  CHECK(result.series.ticks[1].p_micro == 10'050'000);
  CHECK(result.series.ticks[1].volume == 250);
}

TEST_CASE("session filter keeps the last pre-window row as baseline") {
  // window 09:30-16:00; first in-window tick keeps its true dv
  ParseOptions opts;
  opts.from_ns = 34'200'000'000'000;  // 09:30
  opts.to_ns = 57'600'000'000'000;    // 16:00
  const char* csv =
      "34100000000000,699.00,1000\n"   // pre-session
      "34150000000000,699.50,1400\n"   // pre-session (baseline source)
      "34210000000000,700.00,1650\n"   // in session, dv = 250
      "35000000000000,700.10,2000\n"
      "57700000000000,701.00,2600\n";  // post-session
  auto result = parse_ticks(csv, opts);
  const auto& series = result.series;
  REQUIRE(series.ticks.size() == 3);  // baseline + 2 in-window rows
  CHECK(series.ticks[0].t_ns == *opts.from_ns);  // clamped into the window
  CHECK(series.ticks[0].volume == 1400);
  CHECK(result.stats.rows_dropped == 3);
  // total volume = last v - first in-window v + first in-window dv
  CHECK(series.total_volume() == 2000 - 1650 + 250);
  CHECK(series.session_start_ns == *opts.from_ns);
  CHECK(series.session_end_ns == *opts.to_ns);
  series.validate();
}

TEST_CASE("filter with no pre-window rows uses the first row as baseline") {
  ParseOptions opts;
  opts.from_ns = 0;
  opts.to_ns = 10'000;
  auto result = parse_ticks("1000,10.00,100\n2000,10.05,250\n", opts);
  CHECK(result.series.ticks.size() == 2);
  CHECK(result.series.total_volume() == 150);
}

TEST_CASE("window leaving fewer than two ticks is an error") {
  ParseOptions opts;
  opts.from_ns = 5'000;
  opts.to_ns = 6'000;
  CHECK_THROWS_AS(parse_ticks("1000,10.00,100\n2000,10.05,250\n", opts), ParseError);
}

TEST_CASE("price must be positive, decimal, at most 6 places") {
  CHECK_THROWS_AS(parse_ticks("1000,0,100\n2000,10.0,200\n"), ParseError);
  CHECK_THROWS_AS(parse_ticks("1000,-5.0,100\n2000,10.0,200\n"), ParseError);
  CHECK_THROWS_AS(parse_ticks("1000,10.1234567,100\n2000,10.2,200\n"), ParseError);
  auto ok = parse_ticks("1000,10.123456,100\n2000,10.2,200\n");
  CHECK(ok.series.ticks[0].p_micro == 10'123'456);
}

TEST_CASE("too-short input is an error") {
  CHECK_THROWS_AS(parse_ticks(""), ParseError);
  CHECK_THROWS_AS(parse_ticks("1000,10.00,100\n"), ParseError);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(parse_ticks_file("/nonexistent/ticks.csv"), ParseError);
}

TEST_CASE("round-trip: parse(serialize(series)) == series") {
  std::mt19937_64 seeds(20260810);
  for (int trial = 0; trial < 40; ++trial) {
    auto series = testutil::random_series(200, seeds());
    auto round = parse_ticks(serialize_ticks(series));
    CHECK(round.series == series);
  }
}

TEST_CASE("differenced quantities are non-negative after parse") {
  auto series = testutil::random_series(500, 99).ticks;
  std::string csv;
  for (const auto& tk : series)
    csv += std::to_string(tk.t_ns) + "," + format_micro(tk.p_micro) + "," +
           std::to_string(tk.volume) + "\n";
  auto result = parse_ticks(csv);
  for (std::size_t q = 1; q < result.series.ticks.size(); ++q) {
    CHECK(result.series.ticks[q].t_ns >= result.series.ticks[q - 1].t_ns);
    CHECK(result.series.ticks[q].volume >= result.series.ticks[q - 1].volume);
  }
}

TEST_CASE("simultaneous ticks are retained") {
  auto result = parse_ticks("1000,10.00,100\n1000,10.05,250\n1000,10.10,300\n");
  CHECK(result.series.ticks.size() == 3);
  CHECK(result.series.total_time_s() == 0.0);
  CHECK(result.series.total_volume() == 200);
}
