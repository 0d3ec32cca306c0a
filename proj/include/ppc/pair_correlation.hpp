#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppc/density.hpp"
#include "ppc/rational.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

// Ordered-pair count #{ m != n : ||x_m - x_n - gamma|| <= s/N } together with the
// normalized value r2 = count/N. Shifts are reduced to the canonical
// representative in [0, 1/2] before counting, so counts at gamma and 1-gamma
// coincide by construction.
struct PairCountResult {
  std::size_t n = 0;
  double gamma = 0.0;
  double s = 0.0;
  std::uint64_t count = 0;
  double r2 = 0.0;
  std::optional<double> expected;  // 2s*d(gamma) when a density model applies
};

// Direct double loop; the oracle every other kernel is measured against.
PairCountResult r2_count_naive(std::span<const double> pts, double gamma, double s);

// Sort + wraparound-extended array + two-pointer sweep; O(N log N). Produces
// the same integer count as the naive kernel.
PairCountResult r2_count_fast(std::span<const double> pts, double gamma, double s);

// Exact-rational counting: points are scaled to a common denominator and the
// closed-ball comparison is done in integers, so boundary ties are exact.
// Throws std::overflow_error if the common denominator exceeds 64 bits.
PairCountResult r2_count_exact(std::span<const Rational> pts, const Rational& gamma,
                               const Rational& s);

// One result per scale, sharing a single sort. s_values must be positive and
// sorted ascending.
std::vector<PairCountResult> r2_profile(std::span<const double> pts, double gamma,
                                        std::span<const double> s_values);

// Exhaustive exact minimum of ||a - b - shift|| over ordered pairs of `pts`.
Rational min_shifted_distance(std::span<const Rational> pts, const Rational& shift);

// Counts for the doubled sequence (2x mod 1) at scale 2s versus the sum of
// the homogeneous and shift-1/2 counts of the original points. The residual
// is identically zero whenever s/N < 1/4 (the two arcs are disjoint).
struct DoublingIdentity {
  PairCountResult doubled;    // shift 0, scale 2s, on (2x mod 1)
  PairCountResult base_zero;  // shift 0, scale s
  PairCountResult base_half;  // shift 1/2, scale s
  std::int64_t residual = 0;
};
DoublingIdentity doubling_check(std::span<const double> pts, double s);

struct EmpiricalDistribution {
  std::vector<double> grid;
  std::vector<double> values;  // (1/N)#{ x_n <= grid[j] }
};
// Grid must be increasing, within [0,1], and end at 1.
EmpiricalDistribution empirical_cdf(std::span<const double> pts, std::span<const double> grid);

// Equal-width histogram estimate of the density; integrates to 1.
PiecewiseConstantDensity histogram_density(std::span<const double> pts, std::size_t bin_count);

// R2(gamma; s, N) on prefixes of one generated sequence, for each N in the
// schedule, plus the minimum of r2 over the final half of the schedule (a
// finite-N stand-in for the liminf; it is reported as such, never as the
// limit itself). Exact sequences are counted with the exact kernel.
struct TailProfile {
  std::vector<PairCountResult> rows;
  double tail_min_r2 = 0.0;
};
TailProfile f_gamma_tail(const SequenceSpec& spec, double gamma, double s,
                         std::span<const std::size_t> schedule);

}  // namespace ppc
