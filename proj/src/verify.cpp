#include "ppc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ppc/circle.hpp"
#include "ppc/format.hpp"
#include "ppc/pair_correlation.hpp"
#include "ppc/rng.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

namespace {

std::vector<double> random_points(SplitMix64& rng, std::size_t n) {
  std::vector<double> pts(n);
  for (auto& p : pts) p = rng.uniform01();
  return pts;
}

std::optional<std::string> check_oracle_equivalence() {
  SplitMix64 rng(0x05EC5EED01ull);
  const double gammas[] = {0.0, 0.1, 0.25, 0.5};
  const double scales[] = {0.1, 1.0, 5.0};
  for (int inst = 0; inst < 25; ++inst) {
    std::size_t n = 10 + rng.next() % 391;
    auto pts = random_points(rng, n);
    for (double g : gammas) {
      for (double s : scales) {
        auto naive = r2_count_naive(pts, g, s);
        auto fast = r2_count_fast(pts, g, s);
        if (naive.count != fast.count)
          return "instance " + std::to_string(inst) + " n=" + std::to_string(n) +
                 " gamma=" + fmt_double(g) + " s=" + fmt_double(s) +
                 ": naive=" + std::to_string(naive.count) +
                 " fast=" + std::to_string(fast.count);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_gamma_symmetry() {
  SplitMix64 rng(0x05EC5EED02ull);
  for (int inst = 0; inst < 20; ++inst) {
    std::size_t n = 10 + rng.next() % 200;
    auto pts = random_points(rng, n);
    double g = rng.uniform01();
    double s = 0.2 + 3.0 * rng.uniform01();
    auto a = r2_count_fast(pts, g, s);
    auto b = r2_count_fast(pts, 1.0 - g, s);
    if (a.count != b.count)
      return "gamma=" + fmt_double(g) + ": count(gamma)=" + std::to_string(a.count) +
             " count(1-gamma)=" + std::to_string(b.count);
  }
  return std::nullopt;
}

std::optional<std::string> check_saturation() {
  SplitMix64 rng(0x05EC5EED03ull);
  for (int inst = 0; inst < 10; ++inst) {
    std::size_t n = 2 + rng.next() % 100;
    auto pts = random_points(rng, n);
    double s = 0.5 * static_cast<double>(n) * (1.0 + rng.uniform01());
    auto res = r2_count_fast(pts, rng.uniform01(), s);
    auto full = static_cast<std::uint64_t>(n) * (n - 1);
    if (res.count != full)
      return "n=" + std::to_string(n) + ": got " + std::to_string(res.count) + " expected " +
             std::to_string(full);
  }
  return std::nullopt;
}

std::optional<std::string> check_monotonicity() {
  SplitMix64 rng(0x05EC5EED04ull);
  std::vector<double> scales = {0.1, 0.5, 1.0, 2.0, 5.0};
  for (int inst = 0; inst < 10; ++inst) {
    auto pts = random_points(rng, 200);
    auto rows = r2_profile(pts, rng.uniform01(), scales);
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].count < rows[i - 1].count)
        return "count decreased between s=" + fmt_double(scales[i - 1]) + " and s=" +
               fmt_double(scales[i]);
  }
  return std::nullopt;
}

std::optional<std::string> check_doubling() {
  SplitMix64 rng(0x05EC5EED05ull);
  for (int inst = 0; inst < 20; ++inst) {
    std::size_t n = 10 + rng.next() % 291;
    auto pts = inst % 2 == 0
                   ? random_points(rng, n)
                   : dilated_sequence(1, rng.uniform01(), n).values;
    double s = rng.uniform01() * 0.24 * static_cast<double>(n);
    if (s <= 0.0) s = 0.1;
    auto check = doubling_check(pts, s);
    if (check.residual != 0)
      return "instance " + std::to_string(inst) + " n=" + std::to_string(n) +
             " s=" + fmt_double(s) + ": residual=" + std::to_string(check.residual);
  }
  return std::nullopt;
}

std::optional<std::string> check_min_distance(unsigned max_level) {
  const Rational half(1, 2);
  for (unsigned level = 1; level <= max_level; ++level) {
    auto grids = thm3_grid_sets(level, half, half);
    std::vector<Rational> all(grids.y);
    all.insert(all.end(), grids.z.begin(), grids.z.end());
    Rational min = min_shifted_distance(all, half);
    Rational bound(1, std::int64_t(12) << level);
    if (min < bound)
      return "level " + std::to_string(level) + ": min " + min.str() + " < bound " + bound.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_thm3_zero_count() {
  // level 6 prefix: M = 2*6*2^6 = 768, zero count holds for s <= 6/6 = 1
  auto seq = thm3_interleaved(768, Rational(1, 2), Rational(1, 2));
  for (std::int64_t snum : {1, 2}) {
    auto res = r2_count_exact(seq.exact, Rational(1, 2), Rational(snum, 2));
    if (res.count != 0)
      return "M=768 s=" + Rational(snum, 2).str() + ": count=" + std::to_string(res.count);
  }
  return std::nullopt;
}

std::optional<std::string> check_vdc_prefix() {
  for (int k = 1; k <= 10; ++k) {
    std::size_t len = std::size_t(1) << k;
    std::vector<Rational> pts;
    pts.reserve(len);
    for (std::size_t n = 1; n <= len; ++n) pts.push_back(van_der_corput(n));
    std::sort(pts.begin(), pts.end());
    for (std::size_t j = 0; j < len; ++j)
      if (!(pts[j] == Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(len))))
        return "prefix 2^" + std::to_string(k) + " is not the dyadic grid";
  }
  return std::nullopt;
}

std::optional<std::string> check_determinism() {
  SequenceSpec spec;
  spec.kind = SequenceKind::iid_uniform;
  spec.seed = 0xD5EEDull;
  auto a = generate(spec, 5000);
  auto b = generate(spec, 5000);
  if (a.values != b.values) return "identical specs produced different sequences";
  return std::nullopt;
}

}  // namespace

std::vector<VerifyFailure> run_checks(const std::vector<VerifyCheck>& checks) {
  std::vector<VerifyFailure> failures;
  for (const auto& check : checks) {
    if (auto detail = check.run()) failures.push_back({check.name, *detail});
  }
  return failures;
}

std::vector<VerifyCheck> standard_checks(bool quick) {
  const unsigned min_dist_level = quick ? 7u : 10u;
  return {
      {"oracle-equivalence", check_oracle_equivalence},
      {"gamma-symmetry", check_gamma_symmetry},
      {"saturation", check_saturation},
      {"monotonicity", check_monotonicity},
      {"doubling-identity", check_doubling},
      {"min-distance", [min_dist_level] { return check_min_distance(min_dist_level); }},
      {"thm3-zero-count", check_thm3_zero_count},
      {"vdc-prefix-grid", check_vdc_prefix},
      {"determinism", check_determinism},
  };
}

}  // namespace ppc
