#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liqspec {

// Input file could not be parsed (bad row, non-monotone stream, missing file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t row = 0)
      : std::runtime_error(std::move(msg)), row_(row) {}
  // 1-based line number in the input; 0 when not tied to a specific row.
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// The data cannot support the requested computation (null time measure,
// degenerate price support, fully degenerate G^t).
class DegenerateMeasureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative diagonalization failed to reach its threshold in the sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string msg, double residual)
      : std::runtime_error(std::move(msg)), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace liqspec
