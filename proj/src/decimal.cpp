#include "liqspec/decimal.hpp"

#include <charconv>
#include <cstdio>

namespace liqspec {

std::optional<std::int64_t> parse_decimal_micro(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  std::int64_t int_part = 0;
  bool any_digit = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int digit = text[pos] - '0';
    if (int_part > (INT64_MAX - digit) / 10) return std::nullopt;
    int_part = int_part * 10 + digit;
    any_digit = true;
    ++pos;
  }
  std::int64_t frac_micro = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t scale = kPriceScale / 10;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (scale == 0) {
        // more than 6 fractional digits: exact storage impossible
        return std::nullopt;
      }
      frac_micro += static_cast<std::int64_t>(text[pos] - '0') * scale;
      scale /= 10;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit || pos != text.size()) return std::nullopt;
  if (int_part > INT64_MAX / kPriceScale) return std::nullopt;
  return int_part * kPriceScale + frac_micro;
}

std::string format_micro(std::int64_t micro) {
  bool neg = micro < 0;
  std::uint64_t mag = neg ? static_cast<std::uint64_t>(-(micro + 1)) + 1
                          : static_cast<std::uint64_t>(micro);
  std::uint64_t whole = mag / kPriceScale;
  std::uint64_t frac = mag % kPriceScale;
  std::string out = neg ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%06llu", static_cast<unsigned long long>(frac));
    std::string_view digits(buf, 6);
    while (digits.ends_with('0')) digits.remove_suffix(1);
    out += '.';
    out += digits;
  }
  return out;
}

std::optional<std::int64_t> parse_time_of_day_ns(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  std::size_t c1 = text.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  std::size_t c2 = text.find(':', c1 + 1);
  auto hh = parse_int(text.substr(0, c1));
  auto mm = parse_int(c2 == std::string_view::npos
                          ? text.substr(c1 + 1)
                          : text.substr(c1 + 1, c2 - c1 - 1));
  auto ss = c2 == std::string_view::npos ? std::optional<int>(0)
                                         : parse_int(text.substr(c2 + 1));
  if (!hh || !mm || !ss) return std::nullopt;
  if (*hh < 0 || *hh > 24 || *mm < 0 || *mm > 59 || *ss < 0 || *ss > 59)
    return std::nullopt;
  std::int64_t seconds =
      static_cast<std::int64_t>(*hh) * 3600 + *mm * 60 + *ss;
  if (seconds > 24 * 3600) return std::nullopt;
  return seconds * 1'000'000'000;
}

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace liqspec
