#pragma once

// Polynomial price basis Q_0..Q_{d-1}. The default family is Chebyshev-T in
// the affine-mapped variable x = (2p - p_lo - p_hi) / (p_hi - p_lo), which
// keeps the Gram matrices well conditioned up to d ~ 12 on realistic price
// windows. A raw monomial family (identity map, Q_k = p^k) is kept for
// conditioning comparisons; it degrades quickly with d.

#include <span>
#include <string>
#include <vector>

#include "liqspec/tick.hpp"

namespace liqspec {

enum class BasisFamily { kChebyshev, kMonomial };

const char* to_string(BasisFamily family);
BasisFamily basis_family_from_string(const std::string& name);  // throws std::invalid_argument

class Basis {
 public:
  // p_lo < p_hi required when d > 1; equal bounds are permitted for d == 1.
  Basis(int d, BasisFamily family, double p_lo, double p_hi);

  int dimension() const { return d_; }
  BasisFamily family() const { return family_; }
  double p_lo() const { return p_lo_; }
  double p_hi() const { return p_hi_; }

  // Fills out[0..d-1] with Q_0(p)..Q_{d-1}(p). Evaluation outside
  // [p_lo, p_hi] is permitted (extrapolation is the caller's concern).
  void evaluate(double price, std::span<double> out) const {
    if (family_ == BasisFamily::kChebyshev) {
      double x = map_scale_ * price + map_offset_;
      out[0] = 1.0;
      if (d_ > 1) out[1] = x;
      for (int k = 2; k < d_; ++k) out[k] = 2.0 * x * out[k - 1] - out[k - 2];
    } else {
      out[0] = 1.0;
      for (int k = 1; k < d_; ++k) out[k] = out[k - 1] * price;
    }
  }

  std::vector<double> evaluate(double price) const {
    std::vector<double> out(d_);
    evaluate(price, std::span<double>(out));
    return out;
  }

 private:
  int d_;
  BasisFamily family_;
  double p_lo_, p_hi_;
  double map_scale_ = 0.0, map_offset_ = 0.0;
};

// Basis over the measure support of the series (min/max price over the ticks
// that feed the measures; the differencing baseline does not count). Throws
// DegenerateMeasureError when all support prices coincide and d > 1.
Basis make_basis(int d, const TickSeries& series, BasisFamily family = BasisFamily::kChebyshev);

}  // namespace liqspec
