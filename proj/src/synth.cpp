#include "liqspec/synth.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "liqspec/errors.hpp"

namespace liqspec {

void validate(const RateProfile& profile) {
  if (profile.levels.empty())
    throw std::invalid_argument("profile has no levels");
  if (profile.start_ns < 0)
    throw std::invalid_argument("profile start time negative");
  for (std::size_t i = 0; i < profile.levels.size(); ++i) {
    const RateLevel& lv = profile.levels[i];
    std::string where = "level " + std::to_string(i);
    if (lv.price_micro <= 0) throw std::invalid_argument(where + ": price must be positive");
    if (!(lv.rate > 0.0)) throw std::invalid_argument(where + ": rate must be positive");
    if (!(lv.dwell_s > 0.0)) throw std::invalid_argument(where + ": dwell must be positive");
    if (!(lv.spacing_s > 0.0)) throw std::invalid_argument(where + ": spacing must be positive");
    if (lv.size <= 0) throw std::invalid_argument(where + ": trade size must be positive");
    double implied = lv.rate * lv.spacing_s;
    if (std::abs(implied - static_cast<double>(lv.size)) >
        1e-9 * std::max(1.0, static_cast<double>(lv.size)))
      throw std::invalid_argument(where + ": rate * spacing must equal trade size");
  }
}

TickSeries generate(const RateProfile& profile) {
  validate(profile);
  std::mt19937_64 rng(profile.seed);
  std::uniform_real_distribution<double> jitter_factor(0.5, 1.5);

  TickSeries series;
  std::int64_t t = profile.start_ns;
  std::int64_t volume = 0;
  series.ticks.push_back({t, profile.levels.front().price_micro, 0});  // baseline

  for (const RateLevel& lv : profile.levels) {
    auto trades = static_cast<std::int64_t>(std::llround(lv.dwell_s / lv.spacing_s));
    if (trades < 1) trades = 1;
    auto spacing_ns = static_cast<std::int64_t>(std::llround(lv.spacing_s * 1e9));
    if (spacing_ns < 1) spacing_ns = 1;
    for (std::int64_t i = 0; i < trades; ++i) {
      std::int64_t step = spacing_ns;
      if (profile.jitter) {
        step = static_cast<std::int64_t>(
            std::llround(static_cast<double>(spacing_ns) * jitter_factor(rng)));
        if (step < 1) step = 1;
      }
      t += step;
      volume += lv.size;
      series.ticks.push_back({t, lv.price_micro, volume});
    }
  }
  series.session_start_ns = series.ticks.front().t_ns;
  series.session_end_ns = series.ticks.back().t_ns;
  series.validate();
  return series;
}

RateProfile profile_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad profile JSON: ") + e.what());
  }
  RateProfile profile;
  try {
    profile.seed = doc.value("seed", 0ULL);
    profile.jitter = doc.value("jitter", false);
    if (doc.contains("start_time")) {
      if (doc["start_time"].is_string()) {
        auto ns = parse_time_of_day_ns(doc["start_time"].get<std::string>());
        if (!ns) throw std::invalid_argument("bad start_time in profile");
        profile.start_ns = *ns;
      } else {
        profile.start_ns = doc["start_time"].get<std::int64_t>();
      }
    }
    if (!doc.contains("levels") || !doc["levels"].is_array())
      throw std::invalid_argument("profile needs a levels array");
    for (const auto& item : doc["levels"]) {
      RateLevel lv;
      double price = item.at("price").get<double>();
      lv.price_micro = static_cast<std::int64_t>(std::llround(price * kPriceScale));
      lv.rate = item.at("rate").get<double>();
      lv.dwell_s = item.at("dwell").get<double>();
      lv.spacing_s = item.at("spacing").get<double>();
      lv.size = item.at("size").get<std::int64_t>();
      profile.levels.push_back(lv);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad profile JSON: ") + e.what());
  }
  validate(profile);
  return profile;
}

RateProfile profile_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open profile: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_json(buf.str());
}

}  // namespace liqspec
