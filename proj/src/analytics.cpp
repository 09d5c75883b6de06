#include "liqspec/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "liqspec/errors.hpp"

namespace liqspec {

const char* to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::kMaximum: return "maximum";
    case ExtremumKind::kMinimum: return "minimum";
    case ExtremumKind::kSaddle: return "saddle";
    default: return "undetermined";
  }
}

double equilibrium_price(const GramPair& gram, const Spectrum& spectrum) {
  const auto& psi_h = spectrum.pairs[spectrum.H()].state.coeffs;
  double den = quad_form(gram.Gv, psi_h, psi_h);  // <psi_H^2>_v
  if (!(den > 0.0))
    throw std::domain_error("equilibrium state carries no volume");
  return quad_form(gram.Mv, psi_h, psi_h) / den;  // <psi_H^2 p>_v / den
}

ImpactAnalysis impact_extremum(const GramPair& gram, const Spectrum& spectrum) {
  ImpactAnalysis out;
  out.p_H = equilibrium_price(gram, spectrum);
  const int r = spectrum.retained;
  const double lambda_h = spectrum.lambda_H();

  if (r < 2) {
    // no states to vary into: the price functional has no cross terms
    out.beta = std::vector<double>{};
    out.extremum = out.p_H;
    out.ls_condition = 1.0;
    out.kind = ExtremumKind::kUndetermined;
    return out;
  }

  // indices of the non-equilibrium states, pair order
  std::vector<int> rest;
  rest.reserve(r - 1);
  for (int i = 0; i < r; ++i)
    if (i != spectrum.H()) rest.push_back(i);
  const int m = static_cast<int>(rest.size());

  const auto& psi_h = spectrum.pairs[spectrum.H()].state.coeffs;
  std::vector<double> cross(m);  // (pI)^[iH] = <psi_i p psi_H>_v
  Matrix constraint(m, m);       // <psi_i (p - p_H) psi_l>_v
  for (int i = 0; i < m; ++i) {
    const auto& psi_i = spectrum.pairs[rest[i]].state.coeffs;
    cross[i] = quad_form(gram.Mv, psi_i, psi_h);
    for (int l = i; l < m; ++l) {
      const auto& psi_l = spectrum.pairs[rest[l]].state.coeffs;
      double v = quad_form(gram.Mv, psi_i, psi_l) -
                 out.p_H * quad_form(gram.Gv, psi_i, psi_l);
      constraint(i, l) = v;
      constraint(l, i) = v;
    }
  }

  SymEigen eig = jacobi_eigensolve(constraint);
  double abs_max = 0.0, abs_min = HUGE_VAL;
  for (double v : eig.values) {
    abs_max = std::max(abs_max, std::abs(v));
    abs_min = std::min(abs_min, std::abs(v));
  }
  out.ls_condition = abs_min > 0.0 ? abs_max / abs_min : HUGE_VAL;
  if (!(abs_min > 0.0) || out.ls_condition > kImpactDegeneracyCond) {
    out.degenerate = true;
    return out;
  }

  // beta = -constraint^{-1} cross; Ex = p_H - cross^T constraint^{-1} cross / lambda_H
  std::vector<double> z(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int row = 0; row < m; ++row) acc += eig.vectors(row, i) * cross[row];
    z[i] = acc / eig.values[i];
  }
  std::vector<double> beta(m, 0.0);
  double correction = 0.0;
  for (int row = 0; row < m; ++row) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += eig.vectors(row, i) * z[i];
    beta[row] = -acc;
    correction += cross[row] * acc;
  }
  out.beta = std::move(beta);
  out.extremum = out.p_H - correction / lambda_h;

  bool any_pos = eig.values.front() > 0.0;
  bool any_neg = eig.values.back() < 0.0;
  if (any_pos && any_neg)
    out.kind = ExtremumKind::kSaddle;
  else if (any_neg)
    out.kind = ExtremumKind::kMaximum;  // concave price functional
  else
    out.kind = ExtremumKind::kMinimum;
  return out;
}

LocalizedState localized_state(const GramPair& gram, const Basis& basis, double price) {
  TimeKernel kernel(gram.Gt);
  std::vector<double> q = basis.evaluate(price);
  double k = kernel.kernel(q);
  if (!(k > 0.0))
    throw DegenerateMeasureError("localized state kernel is not positive");
  LocalizedState out;
  out.price = price;
  out.kernel = k;
  out.coeffs = kernel.apply_pinv(q);
  double inv_sqrt = 1.0 / std::sqrt(k);
  for (double& c : out.coeffs) c *= inv_sqrt;
  return out;
}

namespace {

double rate_from_kernel(const TimeKernel& kernel, const GramPair& gram,
                        const Basis& basis, double price) {
  std::vector<double> q = basis.evaluate(price);
  std::vector<double> c = kernel.apply_pinv(q);  // Gt^+ Q(P)
  double den = kernel.kernel(q);
  if (!(den > 0.0))
    throw DegenerateMeasureError("localized state kernel is not positive");
  return quad_form(gram.Gv, c, c) / den;
}

}  // namespace

double rate_at_price(const GramPair& gram, const Basis& basis, double price) {
  TimeKernel kernel(gram.Gt);
  return rate_from_kernel(kernel, gram, basis, price);
}

double projection_probability(const GramPair& gram, const Basis& basis,
                              const Spectrum& spectrum, int state_index, double price) {
  if (state_index < 0 || state_index >= spectrum.retained)
    throw std::invalid_argument("state index outside retained spectrum");
  TimeKernel kernel(gram.Gt);
  std::vector<double> q = basis.evaluate(price);
  double k = kernel.kernel(q);
  if (!(k > 0.0))
    throw DegenerateMeasureError("localized state kernel is not positive");
  const auto& coeffs = spectrum.pairs[state_index].state.coeffs;
  double value = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) value += coeffs[j] * q[j];
  return value * value / k;
}

VolumeHistogram volume_histogram(const TickSeries& series, std::int64_t bin_width_micro) {
  if (bin_width_micro <= 0)
    throw std::invalid_argument("histogram bin width must be positive");
  std::map<std::int64_t, std::int64_t> acc;
  for (std::size_t q = 1; q < series.size(); ++q) {
    std::int64_t dv = series.ticks[q].volume - series.ticks[q - 1].volume;
    if (dv == 0) continue;
    std::int64_t edge = (series.ticks[q].p_micro / bin_width_micro) * bin_width_micro;
    acc[edge] += dv;
  }
  VolumeHistogram out;
  out.bin_width_micro = bin_width_micro;
  out.bins.assign(acc.begin(), acc.end());
  for (const auto& [edge, volume] : out.bins) out.total_volume += volume;
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = 0.5 * (lo + hi);
    return out;
  }
  double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = lo + step * i;
  out.back() = hi;
  return out;
}

std::vector<CurvePoint> scan_curves(const GramPair& gram, const Basis& basis,
                                    const Spectrum& spectrum,
                                    std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("empty scan grid");
  TimeKernel kernel(gram.Gt);
  const auto& psi_h = spectrum.pairs[spectrum.H()].state.coeffs;
  const auto& psi_l = spectrum.pairs[spectrum.L()].state.coeffs;
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  std::vector<double> q(gram.d);
  for (double price : grid) {
    basis.evaluate(price, q);
    double k = kernel.kernel(q);
    if (!(k > 0.0))
      throw DegenerateMeasureError("localized state kernel is not positive");
    double rate = rate_from_kernel(kernel, gram, basis, price);
    double vh = 0.0, vl = 0.0;
    for (int j = 0; j < gram.d; ++j) {
      vh += psi_h[j] * q[j];
      vl += psi_l[j] * q[j];
    }
    out.push_back({price, rate, vh * vh / k, vl * vl / k});
  }
  return out;
}

EquilibriumReport build_report(const TickSeries& series, const Basis& basis,
                               const GramPair& gram, const Spectrum& spectrum,
                               const ReportOptions& opts) {
  EquilibriumReport report;
  report.lambda_H = spectrum.lambda_H();
  report.lambda_L = spectrum.lambda_L();
  report.impact = impact_extremum(gram, spectrum);
  report.p_H = report.impact.p_H;
  report.d = spectrum.d;
  report.retained = spectrum.retained;
  report.cond_Gt = spectrum.cond_Gt;

  double lo = opts.grid_lo.value_or(basis.p_lo());
  double hi = opts.grid_hi.value_or(basis.p_hi());
  if (lo > hi) throw std::invalid_argument("scan grid range inverted");
  report.extrapolated_grid = lo < basis.p_lo() || hi > basis.p_hi();
  if (report.extrapolated_grid && !opts.allow_extrapolation)
    throw std::invalid_argument(
        "scan grid extends outside the observed price window (pass the "
        "extrapolation flag to allow)");
  std::vector<double> grid = uniform_grid(lo, hi, opts.grid_points);
  report.curves = scan_curves(gram, basis, spectrum, grid);
  report.histogram = volume_histogram(series, opts.bin_width_micro);
  return report;
}

}  // namespace liqspec
