#pragma once

// Compensated (Kahan) accumulation. Keeps the summation error bounded by a
// few ulps regardless of how many ticks stream through, which the Gram
// accumulation contract relies on (chunked and single-pass accumulation must
// agree to 1e-12 relative on multi-million-tick series).

namespace liqspec {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  void merge(const KahanSum& other) {
    add(other.sum);
    add(-other.carry);
  }

  double value() const { return sum - carry; }
};

}  // namespace liqspec
