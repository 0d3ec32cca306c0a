#include "ppc/presets.hpp"

#include <cmath>

#include "ppc/circle.hpp"
#include "ppc/format.hpp"
#include "ppc/pair_correlation.hpp"
#include "ppc/rng.hpp"

namespace ppc {

namespace {

CheckLine exact_line(const std::string& name, bool pass, const std::string& detail) {
  return {name, pass, detail};
}

CheckLine stat_line(const std::string& name, double measured, double target, double tol) {
  double err = std::fabs(measured - target);
  return {name, err <= tol,
          "measured " + fmt_double(measured) + " vs " + fmt_double(target) + ", |err| " +
              fmt_double(err) + " <= " + fmt_double(tol) + " (artifact threshold)"};
}

}  // namespace

PresetResult run_thm1(const Thm1Options& opt) {
  PresetResult out;
  auto g = theorem1_density(opt.gamma, opt.delta);

  double ov_gamma = density_overlap(g, opt.gamma);
  out.lines.push_back(exact_line(
      "overlap(g, gamma) = 1", std::fabs(ov_gamma - 1.0) <= 1e-12,
      "got " + fmt_double(ov_gamma)));

  double ov_zero = density_overlap(g, 0.0);
  double sq = std::sqrt(opt.delta);
  double closed_form = 2.0 + (1.0 - 2.0 * sq) * (1.0 - 2.0 * sq) / (opt.gamma - opt.delta);
  if (opt.gamma == 0.5) {
    sq = std::sqrt(2.0 * opt.delta);
    closed_form = 2.0 + (1.0 - sq) * (1.0 - sq) / (opt.gamma - opt.delta);
  }
  out.lines.push_back(exact_line(
      "overlap(g, 0) matches closed form", std::fabs(ov_zero - closed_form) <= 1e-12,
      "got " + fmt_double(ov_zero) + " vs " + fmt_double(closed_form)));

  double sum_gamma = 0.0, sum_zero = 0.0;
  for (std::size_t seed = 1; seed <= opt.seed_count; ++seed) {
    auto pts = sample_density(g, opt.n, seed);
    auto at_gamma = r2_count_fast(pts, opt.gamma, 1.0);
    auto at_zero = r2_count_fast(pts, 0.0, 1.0);
    at_gamma.expected = 2.0 * ov_gamma;
    at_zero.expected = 2.0 * ov_zero;
    out.rows.push_back({seed, at_gamma});
    out.rows.push_back({seed, at_zero});
    sum_gamma += at_gamma.r2;
    sum_zero += at_zero.r2;
  }
  const auto seeds = static_cast<double>(opt.seed_count);
  out.lines.push_back(
      stat_line("mean R2(gamma; 1, N) -> 2*overlap(gamma)", sum_gamma / seeds, 2.0 * ov_gamma,
                0.05));
  out.lines.push_back(
      stat_line("mean R2(0; 1, N) -> 2*overlap(0)", sum_zero / seeds, 2.0 * ov_zero, 0.3));

  // finite-scale diagnostic: r2/(2s) against the histogram overlap estimate
  auto sample = sample_density(g, opt.n, 1);
  auto est = histogram_density(sample, 64);
  double est_overlap = density_overlap(est, opt.gamma);
  out.lines.push_back({"diagnostic: histogram overlap-hat(gamma)", true,
                       fmt_double(est_overlap) + " (64 bins, informational)"});
  return out;
}

PresetResult run_thm3(const Thm3Options& opt) {
  PresetResult out;
  const Rational half(1, 2);
  const std::size_t length = 2ull * opt.level << opt.level;  // 2*level*2^level
  auto seq = thm3_interleaved(length, half, half);

  const Rational scales[] = {Rational(1, 2), Rational(1),
                             Rational(static_cast<std::int64_t>(opt.level), 6)};
  for (const auto& s : scales) {
    auto res = r2_count_exact(seq.exact, half, s);
    out.lines.push_back(exact_line(
        "zero count at shift 1/2, M=" + std::to_string(length) + ", s=" + s.str(),
        res.count == 0, "count=" + std::to_string(res.count)));
    out.rows.push_back({0, res});
  }

  for (unsigned level = 1; level <= opt.level; ++level) {
    auto grids = thm3_grid_sets(level, half, half);
    std::vector<Rational> all(grids.y);
    all.insert(all.end(), grids.z.begin(), grids.z.end());
    Rational min = min_shifted_distance(all, half);
    Rational bound(1, std::int64_t(12) << level);
    out.lines.push_back(exact_line(
        "min distance level " + std::to_string(level), min >= bound,
        "min=" + min.str() + " bound=" + bound.str()));
  }
  return out;
}

PresetResult run_thm4(const Thm4Options& opt) {
  PresetResult out;
  const double s_exact = 0.2;
  const double s_stat = 1.0;

  std::uint64_t min_count = UINT64_MAX;
  double sum_stat = 0.0;
  for (std::size_t seed = 1; seed <= opt.seed_count; ++seed) {
    SequenceSpec base;
    base.kind = SequenceKind::iid_uniform;
    base.seed = seed;
    auto doubled = thm4_doubled(generate(base, opt.base_n), opt.gamma2);

    auto at_g2 = r2_count_fast(doubled.values, opt.gamma2, s_exact);
    auto at_g1 = r2_count_fast(doubled.values, opt.gamma1, s_stat);
    out.rows.push_back({seed, at_g2});
    out.rows.push_back({seed, at_g1});
    min_count = std::min(min_count, at_g2.count);
    sum_stat += at_g1.r2;
  }
  out.lines.push_back(exact_line(
      "R2(gamma2; 0.2, 2N) >= 1/2 (count >= N)", min_count >= opt.base_n,
      "min count over seeds " + std::to_string(min_count) + " vs N=" +
          std::to_string(opt.base_n)));
  out.lines.push_back(stat_line("mean R2(gamma1; 1, 2N) -> 2",
                                sum_stat / static_cast<double>(opt.seed_count), 2.0, 0.1));
  return out;
}

PresetResult run_doubling(const DoublingOptions& opt) {
  PresetResult out;
  SplitMix64 rng(0xD0B71E5ull);
  std::size_t failures = 0;
  std::int64_t worst = 0;
  for (std::size_t inst = 0; inst < opt.instances; ++inst) {
    std::size_t n = 10 + rng.next() % (opt.max_n - 9);
    std::vector<double> pts;
    if (inst % 2 == 0) {
      pts.resize(n);
      for (auto& p : pts) p = rng.uniform01();
    } else {
      pts = dilated_sequence(1, rng.uniform01(), n).values;
    }
    double s = rng.uniform01() * 0.24 * static_cast<double>(n);
    if (s <= 0.0) s = 0.05;
    auto check = doubling_check(pts, s);
    if (check.residual != 0) {
      ++failures;
      worst = check.residual;
    }
    out.rows.push_back({inst, check.doubled});
  }
  out.lines.push_back(exact_line(
      "doubling residual = 0 on " + std::to_string(opt.instances) + " instances", failures == 0,
      failures == 0 ? "all residuals zero" : std::to_string(failures) + " failures, e.g. residual " +
                                                 std::to_string(worst)));
  return out;
}

}  // namespace ppc
