#include "liqspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liqspec/errors.hpp"

namespace liqspec {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix transposed(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

double quad_form(const Matrix& m, std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

std::vector<double> mat_vec(const Matrix& m, std::span<const double> x) {
  std::vector<double> out(m.rows(), 0.0);
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * x[j];
    out[i] = row;
  }
  return out;
}

double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

namespace {

double off_diagonal_mass(const Matrix& a) {
  double acc = 0.0;
  int n = a.rows();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) acc += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(acc);
}

}  // namespace

SymEigen jacobi_eigensolve(Matrix a, double rel_tol, int max_sweeps) {
  const int n = a.rows();
  Matrix v = Matrix::identity(n);
  const double norm = frobenius_norm(a);
  const double threshold = rel_tol * norm;

  int sweep = 0;
  double off = off_diagonal_mass(a);
  while (off > threshold && norm > 0.0) {
    if (sweep >= max_sweeps)
      throw ConvergenceError("jacobi diagonalization did not converge", off / norm);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        // rotation annihilating a(p,q)
        double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = a(r, p), arq = a(r, q);
            a(r, p) = c * arp - s * arq;
            a(p, r) = a(r, p);
            a(r, q) = s * arp + c * arq;
            a(q, r) = a(r, q);
          }
          double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
    ++sweep;
    off = off_diagonal_mass(a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i) > a(j, j); });

  SymEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    for (int r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  out.sweeps = sweep;
  out.off_residual = norm > 0.0 ? off / norm : 0.0;
  return out;
}

}  // namespace liqspec
