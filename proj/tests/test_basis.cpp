#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "liqspec/analytics.hpp"
#include "liqspec/basis.hpp"
#include "liqspec/errors.hpp"
#include "liqspec/matrix.hpp"
#include "liqspec/measures.hpp"
#include "liqspec/spectrum.hpp"

using namespace liqspec;

namespace {

// Test-side oracle: expand Q_k into monomial coefficients by polynomial
// arithmetic in the mapped variable, then evaluate by Horner.
std::vector<std::vector<double>> chebyshev_coefficients(int d) {
  std::vector<std::vector<double>> t(d);
  t[0] = {1.0};
  if (d > 1) t[1] = {0.0, 1.0};
  for (int k = 2; k < d; ++k) {
    t[k].assign(k + 1, 0.0);
    for (std::size_t i = 0; i < t[k - 1].size(); ++i) t[k][i + 1] += 2.0 * t[k - 1][i];
    for (std::size_t i = 0; i < t[k - 2].size(); ++i) t[k][i] -= t[k - 2][i];
  }
  return t;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double gram_condition(const TickSeries& series, BasisFamily family, int d) {
  Basis basis = make_basis(d, series, family);
  GramPair gram = accumulate(series, basis);
  SymEigen eig = jacobi_eigensolve(gram.Gt);
  return eig.values.front() / eig.values.back();
}

}  // namespace

TEST_CASE("d=1 basis is the constant 1") {
  Basis basis(1, BasisFamily::kChebyshev, 700.0, 700.0);
  for (double p : {1.0, 650.0, 700.0, 9000.0}) CHECK(basis.evaluate(p)[0] == 1.0);
}

TEST_CASE("midpoint maps to zero") {
  Basis basis(4, BasisFamily::kChebyshev, 690.0, 705.0);
  auto vals = basis.evaluate(697.5);
  CHECK(vals[0] == 1.0);
  CHECK(std::abs(vals[1]) <= 1e-12);
}

TEST_CASE("chebyshev endpoint values") {
  const int d = 6;
  Basis basis(d, BasisFamily::kChebyshev, 690.0, 705.0);
  auto lo = basis.evaluate(690.0);
  auto hi = basis.evaluate(705.0);
  for (int k = 0; k < d; ++k) {
    CHECK(lo[k] == doctest::Approx(k % 2 == 0 ? 1.0 : -1.0).epsilon(1e-12));
    CHECK(hi[k] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("recurrence equals expanded coefficients") {
  const int d = 7;
  Basis basis(d, BasisFamily::kChebyshev, 690.0, 705.0);
  auto coeffs = chebyshev_coefficients(d);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> price(688.0, 707.0);  // incl. extrapolation
  for (int trial = 0; trial < 200; ++trial) {
    double p = price(rng);
    double x = (2.0 * p - 690.0 - 705.0) / (705.0 - 690.0);
    auto vals = basis.evaluate(p);
    for (int k = 0; k < d; ++k) {
      // relative to the polynomial scale; pointwise-relative breaks at roots
      double scale = std::max({1.0, std::abs(vals[k]), std::abs(horner(coeffs[k], x))});
      CHECK(std::abs(vals[k] - horner(coeffs[k], x)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("exact degree: leading coefficient nonzero") {
  auto coeffs = chebyshev_coefficients(9);
  for (int k = 0; k < 9; ++k) {
    CHECK(coeffs[k].size() == static_cast<std::size_t>(k) + 1);
    CHECK(coeffs[k].back() != 0.0);
  }
}

TEST_CASE("monomial family uses the identity map") {
  Basis basis(4, BasisFamily::kMonomial, 10.0, 20.0);
  auto vals = basis.evaluate(3.0);
  CHECK(vals[0] == 1.0);
  CHECK(vals[1] == 3.0);
  CHECK(vals[2] == 9.0);
  CHECK(vals[3] == 27.0);
}

TEST_CASE("make_basis window spans the measure support") {
  auto series = testutil::random_series(1000, 5);
  Basis basis = make_basis(8, series);
  CHECK(basis.p_lo() == micro_to_double(series.min_price_micro()));
  CHECK(basis.p_hi() == micro_to_double(series.max_price_micro()));
}

TEST_CASE("degenerate price support") {
  TickSeries series;
  series.ticks = {{0, 700'000'000, 0}, {1'000'000'000, 700'000'000, 10},
                  {2'000'000'000, 700'000'000, 30}};
  series.session_end_ns = 2'000'000'000;
  CHECK_THROWS_AS(make_basis(2, series, BasisFamily::kChebyshev), DegenerateMeasureError);
  CHECK_NOTHROW(make_basis(1, series, BasisFamily::kChebyshev));
}

TEST_CASE("monomial conditioning collapses at equity prices (d=4)") {
  auto series = testutil::random_series(1000, 42, 700.0, 5.0);
  double cond_cheb = gram_condition(series, BasisFamily::kChebyshev, 4);
  double cond_mono = gram_condition(series, BasisFamily::kMonomial, 4);
  CHECK(cond_mono / cond_cheb >= 1e6);
}

TEST_CASE("spectrum is invariant under the basis choice where both are viable") {
  // order-1 prices keep the raw monomial Gram matrices full rank in doubles
  auto profile = testutil::make_multi_level_profile(
      {0.62, 0.95, 1.31, 1.68, 2.04, 2.41}, {24.0, 6.0, 15.0, 3.0, 9.0, 18.0},
      {48, 12, 30, 6, 18, 36}, 400.0);
  TickSeries series = generate(profile);
  const int d = 4;

  Basis cheb = make_basis(d, series, BasisFamily::kChebyshev);
  Basis mono = make_basis(d, series, BasisFamily::kMonomial);
  Spectrum s_cheb = solve(accumulate(series, cheb));
  Spectrum s_mono = solve(accumulate(series, mono));
  REQUIRE(s_cheb.retained == d);
  REQUIRE(s_mono.retained == d);
  for (int i = 0; i < d; ++i)
    CHECK(testutil::approx_rel(s_cheb.pairs[i].lambda, s_mono.pairs[i].lambda, 1e-6));

  GramPair g_cheb = accumulate(series, cheb);
  GramPair g_mono = accumulate(series, mono);
  double ph_cheb = equilibrium_price(g_cheb, s_cheb);
  double ph_mono = equilibrium_price(g_mono, s_mono);
  CHECK(testutil::approx_rel(ph_cheb, ph_mono, 1e-6));
}

TEST_CASE("evaluation outside the window is finite") {
  Basis basis(10, BasisFamily::kChebyshev, 690.0, 705.0);
  for (double p : {600.0, 689.0, 706.0, 800.0})
    for (double v : basis.evaluate(p)) CHECK(std::isfinite(v));
}

TEST_CASE("bad construction arguments") {
  CHECK_THROWS_AS(Basis(0, BasisFamily::kChebyshev, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Basis(2, BasisFamily::kChebyshev, 2.0, 1.0), std::invalid_argument);
}
