#include "liqspec/tick.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liqspec {

std::int64_t TickSeries::min_price_micro() const {
  std::int64_t lo = INT64_MAX;
  for (std::size_t q = 1; q < ticks.size(); ++q) lo = std::min(lo, ticks[q].p_micro);
  return lo;
}

std::int64_t TickSeries::max_price_micro() const {
  std::int64_t hi = INT64_MIN;
  for (std::size_t q = 1; q < ticks.size(); ++q) hi = std::max(hi, ticks[q].p_micro);
  return hi;
}

void TickSeries::validate() const {
  if (ticks.size() < 2)
    throw std::invalid_argument("tick series needs at least 2 ticks");
  for (std::size_t q = 0; q < ticks.size(); ++q) {
    const Tick& tk = ticks[q];
    if (tk.p_micro <= 0)
      throw std::invalid_argument("non-positive price at tick " + std::to_string(q));
    if (tk.t_ns < session_start_ns || tk.t_ns > session_end_ns)
      throw std::invalid_argument("tick " + std::to_string(q) + " outside session window");
    if (tk.volume < 0)
      throw std::invalid_argument("negative cumulative volume at tick " + std::to_string(q));
    if (q > 0) {
      if (tk.t_ns < ticks[q - 1].t_ns)
        throw std::invalid_argument("time decreases at tick " + std::to_string(q));
      if (tk.volume < ticks[q - 1].volume)
        throw std::invalid_argument("cumulative volume decreases at tick " + std::to_string(q));
    }
  }
}

}  // namespace liqspec
