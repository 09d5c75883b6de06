#include "liqspec/basis.hpp"

#include <stdexcept>

#include "liqspec/errors.hpp"

namespace liqspec {

const char* to_string(BasisFamily family) {
  return family == BasisFamily::kChebyshev ? "chebyshev" : "monomial";
}

BasisFamily basis_family_from_string(const std::string& name) {
  if (name == "chebyshev") return BasisFamily::kChebyshev;
  if (name == "monomial") return BasisFamily::kMonomial;
  throw std::invalid_argument("unknown basis family: " + name);
}

Basis::Basis(int d, BasisFamily family, double p_lo, double p_hi)
    : d_(d), family_(family), p_lo_(p_lo), p_hi_(p_hi) {
  if (d < 1) throw std::invalid_argument("basis dimension must be >= 1");
  if (p_lo > p_hi) throw std::invalid_argument("basis price window inverted");
  if (p_lo == p_hi && d > 1)
    throw DegenerateMeasureError("degenerate price support for requested dimension");
  if (family == BasisFamily::kChebyshev && p_hi > p_lo) {
    map_scale_ = 2.0 / (p_hi - p_lo);
    map_offset_ = -(p_lo + p_hi) / (p_hi - p_lo);
  }
}

Basis make_basis(int d, const TickSeries& series, BasisFamily family) {
  if (series.increments() < 1)
    throw std::invalid_argument("series has no measurable increments");
  double lo = micro_to_double(series.min_price_micro());
  double hi = micro_to_double(series.max_price_micro());
  return Basis(d, family, lo, hi);
}

}  // namespace liqspec
