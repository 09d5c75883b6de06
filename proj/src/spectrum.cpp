#include "liqspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "liqspec/errors.hpp"

namespace liqspec {

TimeKernel::TimeKernel(const Matrix& gt, double eps) {
  SymEigen eig = jacobi_eigensolve(gt);
  const int d = gt.rows();
  double mu_max = eig.values.empty() ? 0.0 : eig.values.front();
  if (mu_max <= 0.0)
    throw DegenerateMeasureError("time measure degenerate");
  int r = 0;
  while (r < d && eig.values[r] > eps * mu_max) ++r;
  whitener_ = Matrix(d, r);
  for (int i = 0; i < r; ++i) {
    double inv_sqrt = 1.0 / std::sqrt(eig.values[i]);
    for (int row = 0; row < d; ++row)
      whitener_(row, i) = eig.vectors(row, i) * inv_sqrt;
  }
  cond_ = mu_max / eig.values[r - 1];
}

std::vector<double> TimeKernel::whiten(std::span<const double> x) const {
  const int d = dim(), r = retained();
  std::vector<double> out(r, 0.0);
  for (int i = 0; i < r; ++i) {
    double acc = 0.0;
    for (int row = 0; row < d; ++row) acc += whitener_(row, i) * x[row];
    out[i] = acc;
  }
  return out;
}

std::vector<double> TimeKernel::apply_pinv(std::span<const double> x) const {
  std::vector<double> z = whiten(x);
  const int d = dim(), r = retained();
  std::vector<double> out(d, 0.0);
  for (int row = 0; row < d; ++row) {
    double acc = 0.0;
    for (int i = 0; i < r; ++i) acc += whitener_(row, i) * z[i];
    out[row] = acc;
  }
  return out;
}

double TimeKernel::kernel(std::span<const double> x) const {
  std::vector<double> z = whiten(x);
  double acc = 0.0;
  for (double v : z) acc += v * v;
  return acc;
}

namespace {

void fix_sign(std::vector<double>& coeffs) {
  std::size_t arg = 0;
  double best = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (std::abs(coeffs[k]) > best) {
      best = std::abs(coeffs[k]);
      arg = k;
    }
  }
  if (coeffs[arg] < 0.0)
    for (double& c : coeffs) c = -c;
}

}  // namespace

Spectrum solve(const GramPair& gram) {
  if (gram.total_time <= 0.0)
    throw DegenerateMeasureError("time measure is null");
  TimeKernel kernel(gram.Gt);
  const int d = gram.d;
  const int r = kernel.retained();
  const Matrix& w = kernel.whitener();

  // whitened problem A = W^T Gv W, symmetrized against accumulation rounding
  Matrix a = multiply(transposed(w), multiply(gram.Gv, w));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = m;
      a(j, i) = m;
    }
  SymEigen eig = jacobi_eigensolve(a);

  Spectrum out;
  out.d = d;
  out.retained = r;
  out.cond_Gt = kernel.cond();
  out.pairs.reserve(r);
  for (int i = 0; i < r; ++i) {
    State st;
    st.coeffs.assign(d, 0.0);
    for (int row = 0; row < d; ++row) {
      double acc = 0.0;
      for (int k = 0; k < r; ++k) acc += w(row, k) * eig.vectors(k, i);
      st.coeffs[row] = acc;
    }
    fix_sign(st.coeffs);
    st.norm_t = quad_form(gram.Gt, st.coeffs, st.coeffs);
    out.pairs.push_back({eig.values[i], std::move(st)});
  }

  // Tied eigenvalues (identical rates at different prices) are ordered by
  // descending <psi^2 p>_t so the H/L selection is reproducible.
  double scale = std::abs(out.pairs.front().lambda);
  for (const auto& pr : out.pairs) scale = std::max(scale, std::abs(pr.lambda));
  std::size_t g = 0;
  while (g < out.pairs.size()) {
    std::size_t end = g + 1;
    while (end < out.pairs.size() &&
           out.pairs[end - 1].lambda - out.pairs[end].lambda <= kEigenvalueTieTol * scale)
      ++end;
    if (end - g > 1) {
      std::stable_sort(out.pairs.begin() + g, out.pairs.begin() + end,
                       [&gram](const EigenPair& x, const EigenPair& y) {
                         return quad_form(gram.Mt, x.state.coeffs, x.state.coeffs) >
                                quad_form(gram.Mt, y.state.coeffs, y.state.coeffs);
                       });
    }
    g = end;
  }
  return out;
}

double rayleigh(const GramPair& gram, std::span<const double> coeffs) {
  double den = quad_form(gram.Gt, coeffs, coeffs);
  if (!(den > 0.0))
    throw std::domain_error("state outside time-measure support");
  return quad_form(gram.Gv, coeffs, coeffs) / den;
}

VariationReport variation_checks(const GramPair& gram, const Spectrum& spectrum) {
  VariationReport report;
  const double lambda_h = spectrum.lambda_H();
  report.grad_tolerance = 1e-6 * std::abs(lambda_h);
  const double step = 1e-6;

  report.all_gradients_ok = true;
  for (const auto& pair : spectrum.pairs) {
    std::vector<double> probe = pair.state.coeffs;
    double worst = 0.0;
    for (std::size_t k = 0; k < probe.size(); ++k) {
      double orig = probe[k];
      probe[k] = orig + step;
      double up = rayleigh(gram, probe);
      probe[k] = orig - step;
      double down = rayleigh(gram, probe);
      probe[k] = orig;
      worst = std::max(worst, std::abs(up - down) / (2.0 * step));
    }
    bool ok = worst <= report.grad_tolerance;
    report.all_gradients_ok = report.all_gradients_ok && ok;
    report.states.push_back({pair.lambda, worst, ok});
  }

  report.second_variation_nonpositive = true;
  for (int l = 0; l < spectrum.retained; ++l) {
    if (l == spectrum.H()) continue;
    double value = 2.0 * (spectrum.pairs[l].lambda - lambda_h);
    report.second_variation_at_H.push_back(value);
    if (value > 0.0) report.second_variation_nonpositive = false;
  }
  return report;
}

}  // namespace liqspec
