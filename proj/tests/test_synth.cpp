#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "liqspec/ingest.hpp"
#include "liqspec/measures.hpp"
#include "liqspec/spectrum.hpp"
#include "liqspec/synth.hpp"

using namespace liqspec;

TEST_CASE("single level arithmetic") {
  RateProfile profile;
  profile.levels.push_back({100'000'000, 50.0, 10.0, 1.0, 50});
  TickSeries series = generate(profile);
  CHECK(series.increments() == 10);  // 10 trades after the baseline row
  CHECK(series.total_volume() == 500);
  CHECK(series.total_time_s() == 10.0);
  series.validate();
}

TEST_CASE("declared rates come back as eigenvalues") {
  auto profile = testutil::make_multi_level_profile({101.0, 99.0}, {200.0, 10.0},
                                                    {100, 20}, 600.0);
  TickSeries series = generate(profile);
  Basis basis = make_basis(2, series);
  Spectrum spectrum = solve(accumulate(series, basis));
  CHECK(testutil::approx_rel(spectrum.lambda_H(), 200.0, 1e-10));
  CHECK(testutil::approx_rel(spectrum.lambda_L(), 10.0, 1e-10));
}

TEST_CASE("per-level realized rate equals the declared rate exactly") {
  auto profile = testutil::make_multi_level_profile(
      {95.0, 100.0, 105.0}, {12.5, 40.0, 4.0}, {25, 80, 16}, 300.0);
  TickSeries series = generate(profile);
  std::size_t q = 1;
  for (const RateLevel& lv : profile.levels) {
    std::int64_t dv = 0, dt_ns = 0;
    while (q < series.size() && series.ticks[q].p_micro == lv.price_micro) {
      dv += series.ticks[q].volume - series.ticks[q - 1].volume;
      dt_ns += series.ticks[q].t_ns - series.ticks[q - 1].t_ns;
      ++q;
    }
    CHECK(static_cast<double>(dv) / (static_cast<double>(dt_ns) * 1e-9) == lv.rate);
  }
  CHECK(q == series.size());
}

TEST_CASE("deterministic mode ignores the seed") {
  auto profile = testutil::make_multi_level_profile({101.0, 99.0}, {20.0, 5.0},
                                                    {40, 10}, 100.0);
  profile.seed = 1;
  TickSeries a = generate(profile);
  profile.seed = 999;
  TickSeries b = generate(profile);
  CHECK(a == b);
}

TEST_CASE("jitter preserves rates approximately and the seed matters") {
  auto profile = testutil::make_multi_level_profile({101.0, 99.0}, {20.0, 5.0},
                                                    {40, 10}, 2'000.0, true, 5);
  TickSeries a = generate(profile);
  profile.seed = 6;
  TickSeries b = generate(profile);
  CHECK(a != b);

  Basis basis = make_basis(2, a);
  Spectrum spectrum = solve(accumulate(a, basis));
  CHECK(testutil::approx_rel(spectrum.lambda_H(), 20.0, 0.1));
  CHECK(testutil::approx_rel(spectrum.lambda_L(), 5.0, 0.1));
}

TEST_CASE("generated series round-trips through the parser") {
  auto profile = testutil::make_multi_level_profile(
      {95.0, 100.0, 105.0}, {12.5, 40.0, 4.0}, {25, 80, 16}, 300.0, true, 12);
  TickSeries series = generate(profile);
  auto round = parse_ticks(serialize_ticks(series));
  CHECK(round.series == series);
}

TEST_CASE("profile JSON") {
  const char* text = R"({
    "seed": 3,
    "start_time": "09:30",
    "jitter": true,
    "levels": [
      {"price": 101.25, "rate": 200.0, "dwell": 600.0, "spacing": 0.5, "size": 100},
      {"price": 99.0, "rate": 10.0, "dwell": 600.0, "spacing": 2.0, "size": 20}
    ]
  })";
  RateProfile profile = profile_from_json(text);
  CHECK(profile.seed == 3);
  CHECK(profile.jitter);
  CHECK(profile.start_ns == 34'200'000'000'000);
  REQUIRE(profile.levels.size() == 2);
  CHECK(profile.levels[0].price_micro == 101'250'000);
  CHECK(profile.levels[0].size == 100);
  CHECK(profile.levels[1].spacing_s == 2.0);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(profile_from_json("{\"levels\": []}"), std::invalid_argument);
  CHECK_THROWS_AS(profile_from_json("not json"), std::invalid_argument);
  // rate * spacing != size
  CHECK_THROWS_AS(profile_from_json(R"({"levels":[
      {"price": 100.0, "rate": 7.0, "dwell": 10.0, "spacing": 1.0, "size": 100}]})"),
                  std::invalid_argument);
  RateProfile bad;
  bad.levels.push_back({100'000'000, -1.0, 10.0, 1.0, 50});
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
