#include "ppc/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ppc/circle.hpp"

namespace ppc {

namespace {

double canonical_gamma(double gamma) {
  double g = frac_unit(gamma);
  if (g > 0.5) g = 1.0 - g;  // exact: 1 - g has no rounding for g in (0.5, 1)
  return g;
}

Rational canonical_gamma(const Rational& gamma) {
  Rational g = gamma.mod1();
  if (g > Rational(1, 2)) g = Rational(1) - g;
  return g;
}

void require_points(std::size_t n) {
  if (n < 2) throw std::invalid_argument("pair count: need at least 2 points");
}

void require_scale(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("pair count: s must be positive");
}

PairCountResult make_result(std::size_t n, double gamma, double s, std::uint64_t count) {
  PairCountResult res;
  res.n = n;
  res.gamma = gamma;
  res.s = s;
  res.count = count;
  res.r2 = static_cast<double>(count) / static_cast<double>(n);
  return res;
}

// Core of the fast kernel, reusable across a profile: `sorted` ascending,
// `ext` = sorted followed by sorted+1.
std::uint64_t fast_count_presorted(const std::vector<double>& sorted,
                                   const std::vector<double>& ext, double gc, double thr) {
  const std::size_t n = sorted.size();
  if (thr >= 0.5) return static_cast<std::uint64_t>(n) * (n - 1);

  const double width = 2.0 * thr;
  std::vector<double> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    double q = sorted[i] - gc - thr;
    base[i] = q - std::floor(q);
  }
  // base is nondecreasing except across at most one wrap
  std::size_t wrap = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (base[i] < base[i - 1]) {
      wrap = i;
      break;
    }
  }

  std::uint64_t total = 0;
  std::uint64_t self_hits = 0;
  std::size_t lo = 0, hi = 0;
  const std::size_t m = ext.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = wrap + k;
    if (i >= n) i -= n;
    const double b = base[i];
    const double ub = b + width;
    while (lo < m && ext[lo] < b) ++lo;
    if (hi < lo) hi = lo;
    while (hi < m && ext[hi] <= ub) ++hi;
    total += hi - lo;
    // self-match decided with the same comparisons the sweep uses
    const double x = sorted[i];
    const double x1 = x + 1.0;
    if ((x >= b && x <= ub) || (x1 >= b && x1 <= ub)) ++self_hits;
  }
  return total - self_hits;
}

}  // namespace

PairCountResult r2_count_naive(std::span<const double> pts, double gamma, double s) {
  const std::size_t n = pts.size();
  require_points(n);
  require_scale(s);
  const double gc = canonical_gamma(gamma);
  const double thr = s / static_cast<double>(n);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (torus_norm(pts[a] - pts[b] - gc) <= thr) ++count;
    }
  }
  return make_result(n, gamma, s, count);
}

PairCountResult r2_count_fast(std::span<const double> pts, double gamma, double s) {
  const std::size_t n = pts.size();
  require_points(n);
  require_scale(s);
  std::vector<double> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> ext(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    ext[i] = sorted[i];
    ext[n + i] = sorted[i] + 1.0;
  }
  std::uint64_t count =
      fast_count_presorted(sorted, ext, canonical_gamma(gamma), s / static_cast<double>(n));
  return make_result(n, gamma, s, count);
}

PairCountResult r2_count_exact(std::span<const Rational> pts, const Rational& gamma,
                               const Rational& s) {
  const std::size_t n = pts.size();
  require_points(n);
  if (!(s > Rational(0))) throw std::invalid_argument("pair count: s must be positive");
  const Rational gc = canonical_gamma(gamma);

  // threshold s/n kept as a 128-bit fraction p/q
  const int128 thr_p = s.num();
  const int128 thr_q = int128(s.den()) * static_cast<std::int64_t>(n);
  if (2 * thr_p >= thr_q)  // ||.|| <= 1/2 always
    return make_result(n, gamma.to_double(), s.to_double(),
                       static_cast<std::uint64_t>(n) * (n - 1));

  std::int64_t denom = gc.den();
  for (const auto& p : pts) denom = lcm_checked(denom, p.den());

  std::vector<std::int64_t> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = pts[i].mod1();
    scaled[i] = r.num() * (denom / r.den());
  }
  const std::int64_t shift = gc.num() * (denom / gc.den());
  // dist/denom <= p/q  <=>  dist <= floor(p*denom/q)
  const std::int64_t dist_max = static_cast<std::int64_t>(thr_p * denom / thr_q);

  // group duplicates; counts become multiplicity products
  std::sort(scaled.begin(), scaled.end());
  std::vector<std::pair<std::int64_t, std::uint64_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scaled[j] == scaled[i]) ++j;
    groups.emplace_back(scaled[i], static_cast<std::uint64_t>(j - i));
    i = j;
  }

  std::uint64_t count = 0;
  for (const auto& [va, ma] : groups) {
    for (const auto& [vb, mb] : groups) {
      std::int64_t d = (va - vb - shift) % denom;
      if (d < 0) d += denom;
      std::int64_t dist = std::min(d, denom - d);
      if (dist <= dist_max) count += (va == vb) ? ma * (ma - 1) : ma * mb;
    }
  }
  return make_result(n, gamma.to_double(), s.to_double(), count);
}

std::vector<PairCountResult> r2_profile(std::span<const double> pts, double gamma,
                                        std::span<const double> s_values) {
  const std::size_t n = pts.size();
  require_points(n);
  if (s_values.empty()) throw std::invalid_argument("r2_profile: empty scale list");
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    if (!(s_values[i] > 0.0)) throw std::invalid_argument("r2_profile: scales must be positive");
    if (i > 0 && s_values[i] < s_values[i - 1])
      throw std::invalid_argument("r2_profile: scales must be sorted ascending");
  }
  std::vector<double> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> ext(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    ext[i] = sorted[i];
    ext[n + i] = sorted[i] + 1.0;
  }
  const double gc = canonical_gamma(gamma);
  std::vector<PairCountResult> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    std::uint64_t count = fast_count_presorted(sorted, ext, gc, s / static_cast<double>(n));
    out.push_back(make_result(n, gamma, s, count));
  }
  return out;
}

Rational min_shifted_distance(std::span<const Rational> pts, const Rational& shift) {
  if (pts.empty()) throw std::invalid_argument("min_shifted_distance: empty point set");
  Rational sc = shift.mod1();
  std::int64_t denom = sc.den() == 1 ? 1 : sc.den();
  for (const auto& p : pts) denom = lcm_checked(denom, p.den());
  std::vector<std::int64_t> scaled(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational r = pts[i].mod1();
    scaled[i] = r.num() * (denom / r.den());
  }
  const std::int64_t s = sc.num() * (denom / sc.den());
  std::int64_t best = denom;  // ||.|| <= 1/2, so denom/2 bounds everything
  for (std::size_t a = 0; a < scaled.size(); ++a) {
    for (std::size_t b = 0; b < scaled.size(); ++b) {
      std::int64_t d = (scaled[a] - scaled[b] - s) % denom;
      if (d < 0) d += denom;
      std::int64_t dist = std::min(d, denom - d);
      if (dist < best) best = dist;
    }
  }
  return Rational(best, denom);
}

DoublingIdentity doubling_check(std::span<const double> pts, double s) {
  const std::size_t n = pts.size();
  require_points(n);
  require_scale(s);
  if (!(s / static_cast<double>(n) < 0.25))
    throw std::invalid_argument("doubling_check: requires s/N < 1/4");

  std::vector<double> doubled(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = 2.0 * pts[i];  // exact
    doubled[i] = t >= 1.0 ? t - 1.0 : t;  // exact (Sterbenz)
  }

  DoublingIdentity out;
  out.doubled = r2_count_naive(doubled, 0.0, 2.0 * s);
  out.base_zero = r2_count_naive(pts, 0.0, s);
  out.base_half = r2_count_naive(pts, 0.5, s);
  out.residual = static_cast<std::int64_t>(out.doubled.count) -
                 static_cast<std::int64_t>(out.base_zero.count + out.base_half.count);
  return out;
}

EmpiricalDistribution empirical_cdf(std::span<const double> pts, std::span<const double> grid) {
  if (pts.empty()) throw std::invalid_argument("empirical_cdf: empty point list");
  if (grid.empty()) throw std::invalid_argument("empirical_cdf: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > 1.0)
      throw std::invalid_argument("empirical_cdf: grid must lie in [0,1]");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("empirical_cdf: grid must be increasing");
  }
  if (grid.back() != 1.0) throw std::invalid_argument("empirical_cdf: grid must end at 1");

  std::vector<double> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  EmpiricalDistribution out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  std::size_t idx = 0;
  for (double g : grid) {
    while (idx < sorted.size() && sorted[idx] <= g) ++idx;
    out.values.push_back(static_cast<double>(idx) / static_cast<double>(sorted.size()));
  }
  return out;
}

PiecewiseConstantDensity histogram_density(std::span<const double> pts, std::size_t bin_count) {
  if (pts.empty()) throw std::invalid_argument("histogram_density: empty point list");
  if (bin_count < 1) throw std::invalid_argument("histogram_density: bin_count must be >= 1");
  std::vector<std::uint64_t> counts(bin_count, 0);
  const auto b = static_cast<double>(bin_count);
  for (double x : pts) {
    auto idx = static_cast<std::size_t>(x * b);
    if (idx >= bin_count) idx = bin_count - 1;
    ++counts[idx];
  }
  std::vector<double> breakpoints(bin_count + 1);
  std::vector<double> values(bin_count);
  for (std::size_t j = 0; j <= bin_count; ++j)
    breakpoints[j] = static_cast<double>(j) / b;
  breakpoints[bin_count] = 1.0;
  const auto n = static_cast<double>(pts.size());
  for (std::size_t j = 0; j < bin_count; ++j)
    values[j] = static_cast<double>(counts[j]) * b / n;
  return {std::move(breakpoints), std::move(values)};
}

TailProfile f_gamma_tail(const SequenceSpec& spec, double gamma, double s,
                         std::span<const std::size_t> schedule) {
  if (schedule.empty()) throw std::invalid_argument("f_gamma_tail: empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("f_gamma_tail: schedule must be increasing");

  GeneratedSequence seq = generate(spec, schedule.back());
  TailProfile out;
  out.rows.reserve(schedule.size());
  for (std::size_t len : schedule) {
    if (seq.is_exact()) {
      std::span<const Rational> prefix(seq.exact.data(), len);
      out.rows.push_back(
          r2_count_exact(prefix, Rational::from_double(gamma), Rational::from_double(s)));
    } else {
      std::span<const double> prefix(seq.values.data(), len);
      out.rows.push_back(r2_count_fast(prefix, gamma, s));
    }
  }
  const std::size_t tail = (schedule.size() + 1) / 2;
  double best = out.rows[schedule.size() - tail].r2;
  for (std::size_t i = schedule.size() - tail; i < schedule.size(); ++i)
    best = std::min(best, out.rows[i].r2);
  out.tail_min_r2 = best;
  return out;
}

}  // namespace ppc
