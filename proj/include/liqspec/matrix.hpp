#pragma once

// Small dense symmetric linear algebra: the method works with d x d Gram
// matrices for d <= 64, so everything here is plain row-major storage and
// deterministic single-threaded algorithms. The eigensolver is a cyclic
// Jacobi diagonalization; identical input bits always produce identical
// output bits.

#include <cstddef>
#include <span>
#include <vector>

namespace liqspec {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transposed(const Matrix& m);

// x^T M y; x and y must have M.rows() / M.cols() elements.
double quad_form(const Matrix& m, std::span<const double> x, std::span<const double> y);
std::vector<double> mat_vec(const Matrix& m, std::span<const double> x);
double frobenius_norm(const Matrix& m);

// Eigendecomposition A = V diag(values) V^T of a real symmetric matrix,
// eigenvalues sorted descending (ties keep diagonalization order). Column i
// of `vectors` is the eigenvector for values[i].
struct SymEigen {
  std::vector<double> values;
  Matrix vectors;
  int sweeps = 0;
  double off_residual = 0.0;  // final off-diagonal mass, relative to ||A||_F
};

// Cyclic Jacobi. Converged when the off-diagonal Frobenius mass drops below
// rel_tol * ||A||_F. Throws ConvergenceError if the sweep budget is exhausted.
SymEigen jacobi_eigensolve(Matrix a, double rel_tol = 1e-14, int max_sweeps = 60);

}  // namespace liqspec
