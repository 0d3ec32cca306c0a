#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ppc/circle.hpp"
#include "ppc/pair_correlation.hpp"
#include "ppc/rng.hpp"
#include "ppc/sequence.hpp"

using ppc::Rational;

namespace {

std::vector<double> random_points(ppc::SplitMix64& rng, std::size_t n) {
  std::vector<double> pts(n);
  for (auto& p : pts) p = rng.uniform01();
  return pts;
}

// Tiny all-Rational reference for the scaled exact kernel.
std::uint64_t exact_reference_count(const std::vector<Rational>& pts, const Rational& gamma,
                                    const Rational& s) {
  Rational thr = s / Rational(static_cast<std::int64_t>(pts.size()));
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (a != b && ppc::shifted_distance(pts[a], pts[b], gamma) <= thr) ++count;
  return count;
}

}  // namespace

TEST_CASE("naive count: hand-enumerated instances") {
  std::vector<double> two{0.0, 0.5};
  auto r = ppc::r2_count_naive(two, 0.5, 0.5);
  CHECK(r.count == 2);
  CHECK(r.r2 == 1.0);

  std::vector<double> three{0.0, 0.25, 0.5};
  auto q = ppc::r2_count_naive(three, 0.0, 0.75);
  CHECK(q.count == 4);
  CHECK(q.r2 == doctest::Approx(4.0 / 3.0));

  auto f = ppc::r2_count_fast(two, 0.5, 0.5);
  CHECK(f.count == 2);

  std::vector<double> one{0.3};
  CHECK_THROWS_AS(ppc::r2_count_naive(one, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ppc::r2_count_naive(two, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ppc::r2_count_fast(one, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("saturation: the ball covers the torus when s/N >= 1/2") {
  ppc::SplitMix64 rng(51);
  for (std::size_t n : {2ull, 7ull, 40ull}) {
    auto pts = random_points(rng, n);
    auto r = ppc::r2_count_naive(pts, 0.37, 0.5 * static_cast<double>(n));
    CHECK(r.count == static_cast<std::uint64_t>(n) * (n - 1));
    auto f = ppc::r2_count_fast(pts, 0.37, 0.5 * static_cast<double>(n));
    CHECK(f.count == r.count);
  }
}

TEST_CASE("fast kernel equals the naive oracle on random instances") {
  ppc::SplitMix64 rng(52);
  const double gammas[] = {0.0, 0.1, 0.25, 0.5, 0.83};
  const double scales[] = {0.1, 1.0, 5.0};
  for (int inst = 0; inst < 30; ++inst) {
    std::size_t n = 10 + rng.next() % 491;
    auto pts = random_points(rng, n);
    for (double g : gammas) {
      for (double s : scales) {
        auto naive = ppc::r2_count_naive(pts, g, s);
        CHECK(ppc::r2_count_fast(pts, g, s).count == naive.count);
        CHECK(naive.count <= static_cast<std::uint64_t>(n) * (n - 1));
      }
    }
  }
  // duplicated points exercise the grouped windows
  auto pts = random_points(rng, 64);
  pts.insert(pts.end(), pts.begin(), pts.begin() + 32);
  for (double g : gammas)
    CHECK(ppc::r2_count_fast(pts, g, 2.0).count == ppc::r2_count_naive(pts, g, 2.0).count);
}

TEST_CASE("gamma symmetry is exact for every kernel") {
  ppc::SplitMix64 rng(53);
  auto pts = random_points(rng, 300);
  for (double g : {0.1, 0.25, 0.333, 0.49}) {
    CHECK(ppc::r2_count_naive(pts, g, 1.0).count ==
          ppc::r2_count_naive(pts, 1.0 - g, 1.0).count);
    CHECK(ppc::r2_count_fast(pts, g, 1.0).count ==
          ppc::r2_count_fast(pts, 1.0 - g, 1.0).count);
  }
}

TEST_CASE("exact kernel matches the all-rational reference and the float kernels") {
  ppc::SplitMix64 rng(54);
  for (int inst = 0; inst < 10; ++inst) {
    std::vector<Rational> pts;
    std::size_t n = 20 + rng.next() % 80;
    for (std::size_t i = 0; i < n; ++i)
      pts.push_back(Rational(static_cast<std::int64_t>(rng.next() % 3072), 3072));
    Rational gamma(static_cast<std::int64_t>(rng.next() % 2), 2);
    Rational s(1 + static_cast<std::int64_t>(rng.next() % 6), 2);
    auto got = ppc::r2_count_exact(pts, gamma, s);
    CHECK(got.count == exact_reference_count(pts, gamma, s));
  }

  // against float kernels on dyadic points (where float arithmetic is exact)
  std::vector<Rational> dyadic;
  std::vector<double> dyadic_f;
  for (int i = 0; i < 200; ++i) {
    auto v = static_cast<std::int64_t>(ppc::SplitMix64(i).next() % 1024);
    dyadic.push_back(Rational(v, 1024));
    dyadic_f.push_back(static_cast<double>(v) / 1024.0);
  }
  auto ex = ppc::r2_count_exact(dyadic, Rational(1, 4), Rational(3, 2));
  CHECK(ex.count == ppc::r2_count_naive(dyadic_f, 0.25, 1.5).count);
  CHECK(ex.count == ppc::r2_count_fast(dyadic_f, 0.25, 1.5).count);
}

TEST_CASE("exact kernel rejects an unrepresentable common denominator") {
  std::vector<Rational> pts;
  pts.push_back(Rational(1, 3486784401));          // 3^20
  pts.push_back(Rational(1, 1099511627776));       // 2^40
  pts.push_back(Rational(1, 7));
  CHECK_THROWS_AS(ppc::r2_count_exact(pts, Rational(0), Rational(1)), std::overflow_error);
}

TEST_CASE("profile: shared sort, monotone in s, symmetric in gamma") {
  ppc::SplitMix64 rng(55);
  auto pts = random_points(rng, 400);
  std::vector<double> scales{0.1, 0.5, 1.0, 2.0, 5.0};
  auto rows = ppc::r2_profile(pts, 0.3, scales);
  REQUIRE(rows.size() == scales.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].count == ppc::r2_count_naive(pts, 0.3, scales[i]).count);
    if (i > 0) CHECK(rows[i].count >= rows[i - 1].count);
  }
  auto mirror = ppc::r2_profile(pts, 0.7, scales);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(mirror[i].count == rows[i].count);

  CHECK_THROWS_AS(ppc::r2_profile(pts, 0.3, std::vector<double>{1.0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("profile of i.i.d. uniform tracks 2s") {
  ppc::SequenceSpec spec;
  spec.kind = ppc::SequenceKind::iid_uniform;
  spec.seed = 12345;
  auto seq = ppc::generate(spec, 100000);
  std::vector<double> scales{0.5, 1.0, 2.0};
  auto rows = ppc::r2_profile(seq.values, 0.25, scales);
  CHECK(std::fabs(rows[0].r2 - 1.0) < 0.1);
  CHECK(std::fabs(rows[1].r2 - 2.0) < 0.1);
  CHECK(std::fabs(rows[2].r2 - 4.0) < 0.1);
}

TEST_CASE("fast kernel handles 1e6 points at s = 1") {
  ppc::SequenceSpec spec;
  spec.kind = ppc::SequenceKind::iid_uniform;
  spec.seed = 9;
  auto seq = ppc::generate(spec, 1000000);
  auto r = ppc::r2_count_fast(seq.values, 0.3, 1.0);
  CHECK(std::fabs(r.r2 - 2.0) < 0.2);
}

TEST_CASE("doubling identity: hand instances and the residual") {
  // thresholds are s/N: with points (0, 0.05), s = 0.4, N = 2 the homogeneous
  // count sees distance 0.05 <= 0.2 and the doubled sequence (0, 0.1) sees
  // 0.1 <= 0.4; the shift-1/2 count is empty
  std::vector<double> close{0.0, 0.05};
  auto a = ppc::doubling_check(close, 0.4);
  CHECK(a.doubled.count == 2);
  CHECK(a.base_zero.count == 2);
  CHECK(a.base_half.count == 0);
  CHECK(a.residual == 0);

  // antipodal-ish pair: nothing is close at either shift once scaled by 1/N
  std::vector<double> spread{0.0, 0.25};
  auto b = ppc::doubling_check(spread, 0.4);
  CHECK(b.doubled.count == 0);
  CHECK(b.base_zero.count == 0);
  CHECK(b.base_half.count == 0);
  CHECK(b.residual == 0);

  CHECK_THROWS_AS(ppc::doubling_check(spread, 0.5), std::invalid_argument);  // s/N = 1/4
}

TEST_CASE("doubling residual vanishes on random and dilated instances") {
  ppc::SplitMix64 rng(56);
  for (int inst = 0; inst < 20; ++inst) {
    std::size_t n = 10 + rng.next() % 191;
    std::vector<double> pts = inst % 2 == 0 ? random_points(rng, n)
                                            : ppc::dilated_sequence(1, rng.uniform01(), n).values;
    double s = rng.uniform01() * 0.24 * static_cast<double>(n);
    if (s <= 0.0) s = 0.1;
    CHECK(ppc::doubling_check(pts, s).residual == 0);
  }
}

TEST_CASE("thm4 lower bound: count >= N at shift gamma2 for any 0 < s < N/2") {
  ppc::SplitMix64 rng(57);
  for (int inst = 0; inst < 10; ++inst) {
    std::size_t n = 50 + rng.next() % 251;
    ppc::GeneratedSequence base;
    base.spec.kind = ppc::SequenceKind::dilated;
    base.values = random_points(rng, n);
    double gamma2 = 0.01 + 0.48 * rng.uniform01();
    auto doubled = ppc::thm4_doubled(base, gamma2);
    double s = 0.01 + rng.uniform01() * (static_cast<double>(n) / 2.0 - 0.02);
    auto r = ppc::r2_count_naive(doubled.values, gamma2, s);
    CHECK(r.count >= n);
    CHECK(r.r2 >= 0.5);
  }
}

TEST_CASE("empirical cdf") {
  std::vector<double> pts{0.1, 0.6};
  std::vector<double> grid{0.5, 1.0};
  auto cdf = ppc::empirical_cdf(pts, grid);
  CHECK(cdf.values == std::vector<double>{0.5, 1.0});

  ppc::SplitMix64 rng(58);
  auto sample = random_points(rng, 20000);
  std::vector<double> fine;
  for (int i = 1; i <= 100; ++i) fine.push_back(static_cast<double>(i) / 100.0);
  auto fit = ppc::empirical_cdf(sample, fine);
  double worst = 0.0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    worst = std::max(worst, std::fabs(fit.values[i] - fine[i]));
    if (i > 0) CHECK(fit.values[i] >= fit.values[i - 1]);
  }
  CHECK(fit.values.back() == 1.0);
  CHECK(worst < 1.95 / std::sqrt(20000.0));

  CHECK_THROWS_AS(ppc::empirical_cdf(std::vector<double>{}, grid), std::invalid_argument);
  CHECK_THROWS_AS(ppc::empirical_cdf(pts, std::vector<double>{0.5, 0.9}),
                  std::invalid_argument);
}

TEST_CASE("histogram density") {
  std::vector<double> centered;
  for (int j = 0; j < 8; ++j) centered.push_back((static_cast<double>(j) + 0.5) / 8.0);
  auto flat = ppc::histogram_density(centered, 8);
  for (double v : flat.values()) CHECK(v == doctest::Approx(1.0));

  auto single = ppc::histogram_density(centered, 1);
  CHECK(single.values() == std::vector<double>{1.0});

  // pinned-seed estimate of the overlap diagnostic
  auto g = ppc::theorem1_density(0.25, 0.0625);
  auto sample = ppc::sample_density(g, 200000, 777);
  auto est = ppc::histogram_density(sample, 64);
  CHECK(std::fabs(ppc::density_overlap(est, 0.25) - 1.0) < 0.05);

  CHECK_THROWS_AS(ppc::histogram_density(std::vector<double>{}, 4), std::invalid_argument);
}

TEST_CASE("min_shifted_distance is exact") {
  std::vector<Rational> pts{Rational(0), Rational(1, 3), Rational(7, 12)};
  // closest ordered pair to shift 1/2: ||7/12 - 0 - 1/2|| = 1/12
  CHECK(ppc::min_shifted_distance(pts, Rational(1, 2)) == Rational(1, 12));
  // an exact hit collapses the minimum to zero
  std::vector<Rational> hit{Rational(0), Rational(1, 2)};
  CHECK(ppc::min_shifted_distance(hit, Rational(1, 2)) == Rational(0));
}

TEST_CASE("f_gamma_tail on the interleaved construction: exact zero in the far tail") {
  ppc::SequenceSpec spec;
  spec.kind = ppc::SequenceKind::thm3_interleaved;  // gamma = eps = 1/2
  std::vector<std::size_t> schedule{16, 48, 128, 20480};
  auto tail = ppc::f_gamma_tail(spec, 0.5, 1.0, schedule);
  REQUIRE(tail.rows.size() == 4);
  CHECK(tail.rows[0].count == 24);  // hand enumeration at M = 16
  CHECK(tail.rows[3].count == 0);   // level 9 >= 6s
  CHECK(tail.tail_min_r2 == 0.0);
}

TEST_CASE("interleaved zero count for gamma < 1/2 at the matching scale") {
  // level 8 prefix (M = 4096) with eps = 1/16: the closest ordered pair to
  // the shift sits at distance 1/12288 = (1/3)/M, so counts vanish for
  // s < 1/3 and the closed ball picks up the exact tie at s = 1/3
  auto seq = ppc::thm3_interleaved(4096, Rational(1, 4), Rational(1, 16));
  for (auto s : {Rational(1, 16), Rational(1, 4)}) {
    auto res = ppc::r2_count_exact(seq.exact, Rational(1, 4), s);
    CHECK(res.count == 0);
  }
  Rational closest = ppc::min_shifted_distance(seq.exact, Rational(1, 4));
  CHECK(closest == Rational(1, 12288));
  auto tie = ppc::r2_count_exact(seq.exact, Rational(1, 4), Rational(1, 3));
  CHECK(tie.count > 0);
}

TEST_CASE("f_gamma_tail: i.i.d. uniform tail minimum sits near 2s") {
  ppc::SequenceSpec spec;
  spec.kind = ppc::SequenceKind::iid_uniform;
  spec.seed = 5;
  std::vector<std::size_t> schedule{20000, 50000, 100000};
  auto tail = ppc::f_gamma_tail(spec, 0.5, 1.0, schedule);
  CHECK(std::fabs(tail.tail_min_r2 - 2.0) < 0.15);

  std::vector<std::size_t> single{5000};
  auto one = ppc::f_gamma_tail(spec, 0.5, 1.0, single);
  CHECK(one.tail_min_r2 == one.rows[0].r2);

  CHECK_THROWS_AS(ppc::f_gamma_tail(spec, 0.5, 1.0, std::vector<std::size_t>{}),
                  std::invalid_argument);
}
