#pragma once

// Generalized eigenproblem Gv psi = lambda Gt psi. Gt is eigendecomposed,
// null-ish directions (eigenvalue <= eps * max) are discarded, the problem is
// whitened to an ordinary symmetric one in the retained subspace and
// diagonalized by cyclic Jacobi. The maximal-lambda state is the equilibrium
// state, the minimal retained one the liquidity-deficit state.

#include <span>
#include <vector>

#include "liqspec/matrix.hpp"
#include "liqspec/measures.hpp"

namespace liqspec {

// Relative eigenvalue floor for regularizing Gt.
inline constexpr double kGtRegularizationEps = 1e-12;
// Eigenvalues within this relative gap are treated as tied and ordered by
// descending <psi^2 p>_t.
inline constexpr double kEigenvalueTieTol = 1e-12;

// Regularized time-measure kernel: W (d x r) with Gt^+ = W W^T restricted to
// the retained subspace. Shared by the eigensolver and the localized-state
// analytics, so both sides use the same regularization.
class TimeKernel {
 public:
  // Throws DegenerateMeasureError("time measure degenerate") when Gt has no
  // strictly positive eigenvalue.
  explicit TimeKernel(const Matrix& gt, double eps = kGtRegularizationEps);

  int dim() const { return whitener_.rows(); }
  int retained() const { return whitener_.cols(); }
  double cond() const { return cond_; }
  const Matrix& whitener() const { return whitener_; }

  // W^T x (length r)
  std::vector<double> whiten(std::span<const double> x) const;
  // Gt^+ x = W W^T x (length d)
  std::vector<double> apply_pinv(std::span<const double> x) const;
  // x^T Gt^+ x = |W^T x|^2
  double kernel(std::span<const double> x) const;

 private:
  Matrix whitener_;  // columns u_i / sqrt(mu_i), retained mu descending
  double cond_ = 1.0;
};

struct State {
  std::vector<double> coeffs;  // psi_k in the basis; largest-|coeff| entry positive
  double norm_t = 0.0;         // <psi^2>_t (1 for solver output)
};

struct EigenPair {
  double lambda;  // shares/second
  State state;
};

struct Spectrum {
  std::vector<EigenPair> pairs;  // retained pairs, lambda descending
  int d = 0;                     // basis dimension
  int retained = 0;              // pairs kept after regularization
  double cond_Gt = 1.0;          // condition of the regularized Gt

  int H() const { return 0; }
  int L() const { return retained - 1; }
  double lambda_H() const { return pairs.front().lambda; }
  double lambda_L() const { return pairs.back().lambda; }
};

// Throws DegenerateMeasureError when the time measure is degenerate and
// ConvergenceError when the diagonalization stalls.
Spectrum solve(const GramPair& gram);

// Rayleigh quotient (psi^T Gv psi) / (psi^T Gt psi). Throws std::domain_error
// "state outside time-measure support" when the denominator is not positive.
double rayleigh(const GramPair& gram, std::span<const double> coeffs);

// Numerical confirmation of the stationarity of the rate functional on every
// eigenstate, and of the sign of its second variation at the equilibrium
// state.
struct VariationReport {
  struct PerState {
    double lambda;
    double grad_max_norm;  // max-norm central-difference gradient of rayleigh
    bool gradient_ok;
  };
  std::vector<PerState> states;
  // 2 (lambda_l - lambda_H) for each retained l != H, in pair order.
  std::vector<double> second_variation_at_H;
  double grad_tolerance = 0.0;  // 1e-6 * lambda_H
  bool all_gradients_ok = false;
  bool second_variation_nonpositive = false;
};

VariationReport variation_checks(const GramPair& gram, const Spectrum& spectrum);

}  // namespace liqspec
