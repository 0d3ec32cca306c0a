#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "ppc/rng.hpp"
#include "ppc/sequence.hpp"

using ppc::Rational;
using ppc::SequenceKind;
using ppc::SequenceSpec;

namespace {

// Independent oracle: c_n = sum a_j(n)/2^(j+1) straight from the binary
// digits of n-1, lowest bit first.
Rational vdc_oracle(std::uint64_t n) {
  Rational sum(0);
  std::uint64_t v = n - 1;
  int j = 0;
  while (v != 0) {
    if (v & 1) sum += Rational(1, std::int64_t(1) << (j + 1));
    v >>= 1;
    ++j;
  }
  return sum;
}

double ks_statistic_uniform(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  const auto n = static_cast<double>(pts.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto di = static_cast<double>(i);
    worst = std::max(worst, std::max((di + 1.0) / n - pts[i], pts[i] - di / n));
  }
  return worst;
}

}  // namespace

TEST_CASE("van der Corput values") {
  CHECK(ppc::van_der_corput(1) == Rational(0));
  CHECK(ppc::van_der_corput(2) == Rational(1, 2));
  CHECK(ppc::van_der_corput(6) == Rational(5, 8));
  CHECK_THROWS_AS(ppc::van_der_corput(0), std::invalid_argument);
}

TEST_CASE("van der Corput matches the digit-sum oracle") {
  for (std::uint64_t n = 1; n <= 4096; ++n) CHECK(ppc::van_der_corput(n) == vdc_oracle(n));
}

TEST_CASE("first 2^k van der Corput terms form the dyadic grid") {
  for (int k = 1; k <= 12; ++k) {
    const std::size_t len = std::size_t(1) << k;
    std::vector<Rational> pts;
    pts.reserve(len);
    for (std::size_t n = 1; n <= len; ++n) pts.push_back(ppc::van_der_corput(n));
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t j = 0; j < len; ++j)
      ok = ok && pts[j] == Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(len));
    CHECK(ok);
  }
}

TEST_CASE("block level") {
  CHECK(ppc::block_level(1) == 0);
  CHECK(ppc::block_level(2) == 1);
  CHECK(ppc::block_level(3) == 2);
  CHECK(ppc::block_level(4) == 2);
  CHECK(ppc::block_level(5) == 3);
  CHECK(ppc::block_level(8) == 3);
  CHECK(ppc::block_level(9) == 4);
}

TEST_CASE("thm3_yz values") {
  const Rational half(1, 2);
  auto [y1, z1] = ppc::thm3_yz(1, half, half);
  CHECK(y1 == Rational(0));
  CHECK(z1 == Rational(5, 6));

  auto [y2, z2] = ppc::thm3_yz(2, half, half);
  CHECK(y2 == Rational(1, 4));
  CHECK(z2 == Rational(11, 12));

  auto [y3, z3] = ppc::thm3_yz(3, Rational(1, 4), Rational(1, 16));
  CHECK(y3 == Rational(1, 64));
  CHECK(z3 == Rational(1, 4) + Rational(1, 64) + Rational(1, 12));

  CHECK_THROWS_AS(ppc::thm3_yz(1, Rational(1, 4), Rational(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(ppc::thm3_yz(1, Rational(1, 4), Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(ppc::thm3_yz(1, half, Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("thm3_yz ranges") {
  const Rational half(1, 2);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    auto [y, z] = ppc::thm3_yz(n, half, half);
    CHECK(y >= Rational(0));
    CHECK(y <= half);
    CHECK(z >= half);
    CHECK(z <= Rational(1));
  }
  const Rational gamma(1, 4), eps(1, 16);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    auto [y, z] = ppc::thm3_yz(n, gamma, eps);
    CHECK(y >= Rational(0));
    CHECK(y <= eps);
    CHECK(z >= gamma);
    CHECK(z < Rational(1));
  }
}

TEST_CASE("thm3 interleaving start and first repetition") {
  const Rational half(1, 2);
  auto seq = ppc::thm3_interleaved(8, half, half);
  REQUIRE(seq.size() == 8);
  CHECK(seq.exact[0] == Rational(0));
  CHECK(seq.exact[1] == Rational(5, 6));
  CHECK(seq.exact[2] == Rational(1, 4));
  CHECK(seq.exact[3] == Rational(11, 12));
  for (int i = 0; i < 4; ++i) CHECK(seq.exact[4 + i] == seq.exact[i]);  // terms 5..8 repeat 1..4
}

TEST_CASE("thm3 interleaving multiplicities: N copies of each grid point at M = 2N*2^N") {
  const Rational half(1, 2);
  for (unsigned level = 1; level <= 4; ++level) {
    const std::size_t m = (2ull * level) << level;
    auto seq = ppc::thm3_interleaved(m, half, half);
    REQUIRE(seq.size() == m);
    std::map<std::pair<std::int64_t, std::int64_t>, unsigned> counts;
    for (const auto& p : seq.exact) ++counts[{p.num(), p.den()}];
    const std::uint64_t block = 1ull << level;
    for (std::uint64_t i = 1; i <= block; ++i) {
      auto [y, z] = ppc::thm3_yz(i, half, half);
      CHECK(counts[{y.num(), y.den()}] == level);
      CHECK(counts[{z.num(), z.den()}] == level);
    }
  }
}

TEST_CASE("thm3 prefixes live inside the grid sets of their level") {
  const Rational half(1, 2);
  ppc::SplitMix64 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t m = 4 + rng.next() % 3000;
    unsigned level = ppc::prefix_grid_level(m);
    auto grids = ppc::thm3_grid_sets(level, half, half);
    std::vector<Rational> all(grids.y);
    all.insert(all.end(), grids.z.begin(), grids.z.end());
    std::sort(all.begin(), all.end());
    auto seq = ppc::thm3_interleaved(m, half, half);
    for (const auto& p : seq.exact)
      CHECK(std::binary_search(all.begin(), all.end(), p));
  }
}

TEST_CASE("grid sets: sizes, extrema, preconditions") {
  const Rational half(1, 2);
  auto g1 = ppc::thm3_grid_sets(1, half, half);
  CHECK(g1.y.size() == 4);
  CHECK(g1.y.front() == Rational(0));
  CHECK(g1.y.back() == Rational(3, 8));
  for (unsigned level = 1; level <= 6; ++level) {
    auto g = ppc::thm3_grid_sets(level, half, half);
    CHECK(g.z.front() == half + Rational(1, std::int64_t(3) << (level + 1)));
    CHECK(g.z.back() <= Rational(1));
  }
  CHECK_THROWS_AS(ppc::thm3_grid_sets(1, Rational(1, 4), Rational(1, 16)),
                  std::invalid_argument);
}

TEST_CASE("thm4 doubling of a base sequence") {
  ppc::GeneratedSequence base;
  base.spec.kind = SequenceKind::dilated;
  base.values = {0.2, 0.7};
  auto out = ppc::thm4_doubled(base, 0.15);
  REQUIRE(out.size() == 4);
  CHECK(out.values[0] == doctest::Approx(0.2));
  CHECK(out.values[1] == doctest::Approx(0.35));
  CHECK(out.values[2] == doctest::Approx(0.7));
  CHECK(out.values[3] == doctest::Approx(0.85));

  ppc::GeneratedSequence wrap;
  wrap.spec.kind = SequenceKind::dilated;
  wrap.values = {0.9};
  auto wrapped = ppc::thm4_doubled(wrap, 0.3);
  REQUIRE(wrapped.size() == 2);
  CHECK(wrapped.values[0] == doctest::Approx(0.9));
  CHECK(wrapped.values[1] == doctest::Approx(0.2));

  ppc::GeneratedSequence empty;
  CHECK_THROWS_AS(ppc::thm4_doubled(empty, 0.1), std::invalid_argument);
}

TEST_CASE("sample_density: uniform passes the KS bound at n = 1e5") {
  auto pts = ppc::sample_density(ppc::PiecewiseConstantDensity::uniform(), 100000, 99);
  double ks = ks_statistic_uniform(pts);
  CHECK(ks < 1.95 / std::sqrt(100000.0));
}

TEST_CASE("sample_density respects zero-probability regions") {
  auto g = ppc::theorem1_density(0.25, 0.0625);
  auto pts = ppc::sample_density(g, 50000, 7);
  for (double p : pts) {
    CHECK(p >= 0.0);
    CHECK(p < 0.3125);  // support ends at gamma + delta
  }
  CHECK(ppc::sample_density(g, 0, 7).empty());
}

TEST_CASE("sample_density is deterministic per seed") {
  auto g = ppc::theorem1_density(0.25, 0.0625);
  CHECK(ppc::sample_density(g, 2000, 5) == ppc::sample_density(g, 2000, 5));
  CHECK(ppc::sample_density(g, 2000, 5) != ppc::sample_density(g, 2000, 6));
}

TEST_CASE("dilated sequence") {
  auto s = ppc::dilated_sequence(1, 0.5, 3);
  CHECK(s.values == std::vector<double>{0.5, 0.0, 0.5});

  double x = std::sqrt(2.0);
  auto one = ppc::dilated_sequence(1, x, 100);
  auto two = ppc::dilated_sequence(2, x, 100);
  for (std::size_t i = 0; i < 100; ++i) {
    double doubled = ppc::frac_unit(2.0 * one.values[i]);
    CHECK(two.values[i] == doubled);  // exact: both routes round identically
    CHECK(one.values[i] >= 0.0);
    CHECK(one.values[i] < 1.0);
  }
}

TEST_CASE("spec validation") {
  SequenceSpec s;
  s.kind = SequenceKind::iid_uniform;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // seed required
  s.seed = 1;
  CHECK_NOTHROW(s.validate());

  SequenceSpec d;
  d.kind = SequenceKind::iid_density;
  d.seed = 1;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);  // density required

  SequenceSpec t;
  t.kind = SequenceKind::thm3_interleaved;
  t.gamma = Rational(1, 4);
  t.epsilon = Rational(1, 4);
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("generate: length, determinism, exactness flags") {
  SequenceSpec spec;
  spec.kind = SequenceKind::thm3_interleaved;
  auto a = ppc::generate(spec, 777);
  auto b = ppc::generate(spec, 777);
  CHECK(a.size() == 777);
  CHECK(a.is_exact());
  CHECK(a.exact == b.exact);
  CHECK(a.values == b.values);

  SequenceSpec doubled;
  doubled.kind = SequenceKind::thm4_doubled;
  doubled.base = std::make_shared<SequenceSpec>();
  doubled.base->kind = SequenceKind::iid_uniform;
  doubled.base->seed = 3;
  doubled.gamma2 = 0.15;
  auto odd = ppc::generate(doubled, 101);  // odd length truncates the last pair
  CHECK(odd.size() == 101);
  CHECK_FALSE(odd.is_exact());
  for (double v : odd.values) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }

  SequenceSpec vdc;
  vdc.kind = SequenceKind::vdc;
  auto c = ppc::generate(vdc, 64);
  CHECK(c.is_exact());
  CHECK(c.exact[5] == Rational(5, 8));
  CHECK(c.point(5).is_exact());
  CHECK(c.point(5).value() == 0.625);
}
