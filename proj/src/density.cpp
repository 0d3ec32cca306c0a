#include "ppc/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ppc/circle.hpp"

namespace ppc {

namespace {

constexpr double kIntegralTol = 1e-12;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("density: " + msg); }

}  // namespace

PiecewiseConstantDensity::PiecewiseConstantDensity(std::vector<double> breakpoints,
                                                   std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2) fail("need at least two breakpoints");
  if (values_.size() != breakpoints_.size() - 1)
    fail("values must have one entry per interval");
  if (breakpoints_.front() != 0.0) fail("breakpoints must start at 0");
  if (breakpoints_.back() != 1.0) fail("breakpoints must end at 1");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) fail("non-finite breakpoint");
    if (breakpoints_[i + 1] <= breakpoints_[i])
      fail("breakpoints must be strictly increasing (zero-length interval)");
  }
  double integral = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) fail("values must be finite and >= 0");
    integral += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
  if (std::fabs(integral - 1.0) > kIntegralTol)
    fail("does not integrate to 1 (got " + std::to_string(integral) + ")");
}

double PiecewiseConstantDensity::value_at(double x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) return values_.front();
  if (idx > values_.size()) return values_.back();
  return values_[idx - 1];
}

double density_overlap(const PiecewiseConstantDensity& g, double gamma) {
  double gc = frac_unit(gamma);
  std::vector<double> cuts;
  cuts.reserve(2 * g.breakpoints().size());
  for (double b : g.breakpoints()) {
    cuts.push_back(frac_unit(b));
    cuts.push_back(frac_unit(b - gc));
  }
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    double lo = cuts[j];
    double hi = cuts[j + 1];
    if (hi <= lo) continue;
    double mid = lo + (hi - lo) / 2;
    double shifted = mid + gc;
    if (shifted >= 1.0) shifted -= 1.0;
    total += g.value_at(mid) * g.value_at(shifted) * (hi - lo);
  }
  return total;
}

PiecewiseConstantDensity theorem1_density(double gamma, double delta) {
  auto bad = [](const std::string& msg) {
    throw std::invalid_argument("theorem1_density: " + msg);
  };
  if (!(gamma > 0.0 && gamma <= 0.5)) bad("gamma must be in (0, 1/2]");
  double peak, plateau;
  if (gamma == 0.5) {
    if (!(delta > 0.0 && delta < 0.5)) bad("gamma = 1/2 requires 0 < delta < 1/2");
    peak = 1.0 / std::sqrt(2.0 * delta);
    plateau = (1.0 - std::sqrt(2.0 * delta)) / (gamma - delta);
  } else {
    if (!(delta > 0.0 && delta < gamma)) bad("requires 0 < delta < gamma");
    if (!(delta < 1.0 - 2.0 * gamma)) bad("requires delta < 1 - 2*gamma");
    if (delta > 0.25) bad("requires delta <= 1/4 so the plateau stays nonnegative");
    peak = 1.0 / std::sqrt(delta);
    plateau = (1.0 - 2.0 * std::sqrt(delta)) / (gamma - delta);
  }
  return {{0.0, delta, gamma, gamma + delta, 1.0}, {peak, plateau, peak, 0.0}};
}

PiecewiseConstantDensity theorem3_density(double gamma, double epsilon) {
  auto bad = [](const std::string& msg) {
    throw std::invalid_argument("theorem3_density: " + msg);
  };
  if (!(gamma > 0.0 && gamma < 0.5)) bad("gamma must be in (0, 1/2)");
  int exp = 0;
  double fr = std::frexp(epsilon, &exp);
  if (!(epsilon > 0.0 && fr == 0.5 && epsilon <= 0.5)) bad("epsilon must be 2^-i with i >= 1");
  if (!(epsilon < gamma)) bad("requires epsilon < gamma");
  if (!(epsilon < 0.5 * (0.5 - gamma))) bad("requires epsilon < (1/2)(1/2 - gamma)");
  double h = 1.0 / (2.0 * epsilon);
  return {{0.0, epsilon, gamma, gamma + epsilon, 1.0}, {h, 0.0, h, 0.0}};
}

}  // namespace ppc
