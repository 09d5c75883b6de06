#pragma once

// Observables derived from a solved spectrum: equilibrium price, the
// dynamic-impact extremum of the price functional, localized states and
// their reproducing-kernel projections, the I(P) matching-rate curve, and
// the plain price-volume histogram baseline.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liqspec/basis.hpp"
#include "liqspec/measures.hpp"
#include "liqspec/spectrum.hpp"
#include "liqspec/tick.hpp"

namespace liqspec {

// Constraint matrices with condition beyond this are reported as degenerate
// (price variation too small to resolve) rather than inverted.
inline constexpr double kImpactDegeneracyCond = 1e12;

// Unit-time-norm state concentrated at price P through the reproducing
// kernel of Gt.
struct LocalizedState {
  double price = 0.0;
  std::vector<double> coeffs;
  double kernel = 0.0;  // K(P,P) = Q(P)^T Gt^+ Q(P)
};

enum class ExtremumKind { kMaximum, kMinimum, kSaddle, kUndetermined };
const char* to_string(ExtremumKind kind);

struct ImpactAnalysis {
  double p_H = 0.0;  // equilibrium price
  // Extremizing expansion coefficients over the non-equilibrium states (pair
  // order, H omitted); absent when degenerate.
  std::optional<std::vector<double>> beta;
  std::optional<double> extremum;  // Ex of the price functional
  double ls_condition = 0.0;       // condition of the constraint matrix
  bool degenerate = false;
  ExtremumKind kind = ExtremumKind::kUndetermined;
};

struct CurvePoint {
  double price;
  double rate;  // I(P)
  double w_H;
  double w_L;
};

struct VolumeHistogram {
  std::int64_t bin_width_micro = 0;
  // (bin lower edge in micro-units, shares) sorted by edge
  std::vector<std::pair<std::int64_t, std::int64_t>> bins;
  std::int64_t total_volume = 0;  // == sum of bins, exact
};

// <psi_H^2 p>_v / <psi_H^2>_v. Throws std::domain_error when the equilibrium
// state carries no volume.
double equilibrium_price(const GramPair& gram, const Spectrum& spectrum);

// Second-order extremum of the price functional under state variation,
// solved from the (retained-1)-sized constraint system. Reports degeneracy
// instead of inverting an ill-conditioned constraint matrix.
ImpactAnalysis impact_extremum(const GramPair& gram, const Spectrum& spectrum);

LocalizedState localized_state(const GramPair& gram, const Basis& basis, double price);

// Matching rate I(P) at price P via the reproducing-kernel closed form
// Q(P)^T Gt^+ Gv Gt^+ Q(P) / Q(P)^T Gt^+ Q(P). Agrees with
// rayleigh(localized_state(P)) by construction.
double rate_at_price(const GramPair& gram, const Basis& basis, double price);

// w_i(P) = psi_i(P)^2 / K(P,P), in [0, 1], summing to 1 over the retained
// spectrum.
double projection_probability(const GramPair& gram, const Basis& basis,
                              const Spectrum& spectrum, int state_index, double price);

// Exact integer binning of per-tick volume increments by price.
VolumeHistogram volume_histogram(const TickSeries& series, std::int64_t bin_width_micro);

std::vector<double> uniform_grid(double lo, double hi, int points);

std::vector<CurvePoint> scan_curves(const GramPair& gram, const Basis& basis,
                                    const Spectrum& spectrum,
                                    std::span<const double> grid);

struct EquilibriumReport {
  double lambda_H = 0.0;
  double lambda_L = 0.0;
  double p_H = 0.0;
  ImpactAnalysis impact;
  std::vector<CurvePoint> curves;
  VolumeHistogram histogram;
  int d = 0;
  int retained = 0;
  double cond_Gt = 0.0;
  bool extrapolated_grid = false;
};

struct ReportOptions {
  int grid_points = 512;
  std::optional<double> grid_lo;  // default: basis window
  std::optional<double> grid_hi;
  bool allow_extrapolation = false;
  std::int64_t bin_width_micro = 10'000;  // 0.01 currency units
};

EquilibriumReport build_report(const TickSeries& series, const Basis& basis,
                               const GramPair& gram, const Spectrum& spectrum,
                               const ReportOptions& opts = {});

}  // namespace liqspec
