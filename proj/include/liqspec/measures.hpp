#pragma once

// Time- and volume-measure Gram matrices over a polynomial basis:
//   Gt[j][k] = sum_q dt_q Q_j(p_q) Q_k(p_q)
//   Gv[j][k] = sum_q dv_q Q_j(p_q) Q_k(p_q)
// plus the price-weighted cross moments Mt/Mv (same sums with an extra
// factor p_q), which downstream analytics needs for equilibrium-price and
// impact moments. Accumulation is compensated and may run chunk-parallel;
// chunk boundaries are fixed by tick index, so results do not depend on the
// thread count.

#include <cstdint>
#include <functional>

#include "liqspec/basis.hpp"
#include "liqspec/matrix.hpp"
#include "liqspec/tick.hpp"

namespace liqspec {

inline constexpr int kMaxDimension = 64;

struct GramPair {
  int d = 0;
  Matrix Gt;  // <Q_j Q_k>_t, seconds
  Matrix Gv;  // <Q_j Q_k>_v, shares
  Matrix Mt;  // <Q_j p Q_k>_t
  Matrix Mv;  // <Q_j p Q_k>_v
  double total_time = 0.0;    // == Gt(0,0) while Q_0 is the constant 1
  double total_volume = 0.0;  // == Gv(0,0)

  bool operator==(const GramPair&) const = default;
};

struct AccumulateOptions {
  // 0: use LIQSPEC_THREADS if set, else hardware concurrency.
  int threads = 0;
  // Ticks per accumulation chunk; fixed boundaries keep results independent
  // of the thread count.
  std::size_t chunk_ticks = 65536;
};

// Walks increments q = 1..n-1 (the first tick is baseline only). Throws
// DegenerateMeasureError("time measure is null") when the series spans zero
// time, std::invalid_argument for d outside [1, 64] or a series shorter than
// two ticks.
GramPair accumulate(const TickSeries& series, const Basis& basis,
                    const AccumulateOptions& opts = {});

// Pure matrix sum of two accumulations over disjoint tick ranges.
GramPair merge(const GramPair& a, const GramPair& b);

enum class Weight { kTime, kVolume };

// Direct compensated sum of dw_q * f(p_q) over the increments; the
// independent single-pass route used to cross-check Gram quadratic forms.
double weighted_moment(const TickSeries& series, Weight weight,
                       const std::function<double(double)>& f);

}  // namespace liqspec
