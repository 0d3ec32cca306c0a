#pragma once

#include <cstddef>
#include <vector>

namespace ppc {

// Probability density on [0,1): constant values[i] on
// [breakpoints[i], breakpoints[i+1]). Breakpoints are strictly increasing,
// start at 0 and end at 1; zero-length intervals are rejected at
// construction. The integral must equal 1 to within 1e-12.
class PiecewiseConstantDensity {
 public:
  PiecewiseConstantDensity(std::vector<double> breakpoints, std::vector<double> values);

  static PiecewiseConstantDensity uniform() { return {{0.0, 1.0}, {1.0}}; }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t interval_count() const { return values_.size(); }

  // x must lie in [0,1).
  double value_at(double x) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// The overlap integral of g(x)*g({x+gamma}) over [0,1), computed by splitting [0,1) at the breakpoints of g
// and the breakpoints shifted by -gamma mod 1. No quadrature is involved; the
// only error is float rounding in the products.
double density_overlap(const PiecewiseConstantDensity& g, double gamma);

// Two-bump density with overlap exactly 1 at shift gamma. For gamma < 1/2 requires
// 0 < delta < gamma, delta < 1 - 2*gamma and delta <= 1/4 (nonnegativity of the middle plateau);
// for gamma = 1/2 requires 0 < delta < 1/2.
PiecewiseConstantDensity theorem1_density(double gamma, double delta);

// Two thin boxes of width eps at 0 and gamma. Requires gamma in (0,1/2), eps = 2^-i with
// i >= 1, and eps < min{(1/2)(1/2 - gamma), gamma}. Overlap at shift gamma is 1/(4*eps).
PiecewiseConstantDensity theorem3_density(double gamma, double epsilon);

}  // namespace ppc
