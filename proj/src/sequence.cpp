#include "ppc/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ppc/rng.hpp"

namespace ppc {

namespace {

const Rational kHalf{1, 2};

bool power_of_two_reciprocal(const Rational& eps) {
  std::int64_t d = eps.den();
  return eps.num() == 1 && d >= 2 && (d & (d - 1)) == 0;
}

void validate_thm3_params(const Rational& gamma, const Rational& epsilon) {
  if (gamma == kHalf) {
    if (!(epsilon == kHalf))
      throw std::invalid_argument("thm3: gamma = 1/2 requires epsilon = 1/2");
    return;
  }
  if (!(gamma > Rational(0) && gamma < kHalf))
    throw std::invalid_argument("thm3: gamma must be in (0, 1/2]");
  if (!power_of_two_reciprocal(epsilon))
    throw std::invalid_argument("thm3: epsilon must be 2^-i with i >= 1");
  if (!(epsilon < gamma))
    throw std::invalid_argument("thm3: requires epsilon < gamma");
  if (!(epsilon < (kHalf - gamma) * kHalf))
    throw std::invalid_argument("thm3: requires epsilon < (1/2)(1/2 - gamma)");
}

}  // namespace

const char* kind_name(SequenceKind k) {
  switch (k) {
    case SequenceKind::vdc: return "vdc";
    case SequenceKind::iid_uniform: return "iid_uniform";
    case SequenceKind::iid_density: return "iid_density";
    case SequenceKind::thm3_interleaved: return "thm3_interleaved";
    case SequenceKind::thm4_doubled: return "thm4_doubled";
    case SequenceKind::dilated: return "dilated";
  }
  return "?";
}

SequenceKind kind_from_name(const std::string& name) {
  if (name == "vdc") return SequenceKind::vdc;
  if (name == "iid_uniform") return SequenceKind::iid_uniform;
  if (name == "iid_density") return SequenceKind::iid_density;
  if (name == "thm3_interleaved") return SequenceKind::thm3_interleaved;
  if (name == "thm4_doubled") return SequenceKind::thm4_doubled;
  if (name == "dilated") return SequenceKind::dilated;
  throw std::invalid_argument("unknown sequence kind: " + name);
}

bool SequenceSpec::is_random() const {
  switch (kind) {
    case SequenceKind::iid_uniform:
    case SequenceKind::iid_density:
      return true;
    case SequenceKind::thm4_doubled:
      return base && base->is_random();
    default:
      return false;
  }
}

bool SequenceSpec::is_exact() const {
  return kind == SequenceKind::vdc || kind == SequenceKind::thm3_interleaved;
}

void SequenceSpec::validate() const {
  switch (kind) {
    case SequenceKind::vdc:
      break;
    case SequenceKind::iid_uniform:
      if (!seed) throw std::invalid_argument("spec: iid_uniform requires a seed");
      break;
    case SequenceKind::iid_density:
      if (!seed) throw std::invalid_argument("spec: iid_density requires a seed");
      if (!density) throw std::invalid_argument("spec: iid_density requires a density");
      break;
    case SequenceKind::thm3_interleaved:
      validate_thm3_params(gamma, epsilon);
      break;
    case SequenceKind::thm4_doubled:
      if (!base) throw std::invalid_argument("spec: thm4_doubled requires a base spec");
      if (!std::isfinite(gamma2)) throw std::invalid_argument("spec: gamma2 must be finite");
      base->validate();
      break;
    case SequenceKind::dilated:
      if (multiplier == 0) throw std::invalid_argument("spec: multiplier must be positive");
      if (!std::isfinite(x)) throw std::invalid_argument("spec: x must be finite");
      break;
  }
}

Rational van_der_corput(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("van_der_corput: index starts at 1");
  std::uint64_t v = n - 1;
  if (v == 0) return Rational(0);
  int m = std::bit_width(v);
  if (m > 62) throw std::overflow_error("van_der_corput: index too large for exact form");
  std::uint64_t rev = 0;
  for (int j = 0; j < m; ++j)
    if ((v >> j) & 1) rev |= 1ull << (m - 1 - j);
  return Rational(static_cast<std::int64_t>(rev), static_cast<std::int64_t>(1ull << m));
}

unsigned block_level(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("block_level: index starts at 1");
  if (n == 1) return 0;
  return static_cast<unsigned>(std::bit_width(n - 1));
}

std::pair<Rational, Rational> thm3_yz(std::uint64_t n, const Rational& gamma,
                                      const Rational& epsilon) {
  validate_thm3_params(gamma, epsilon);
  unsigned level = block_level(n);
  if (level > 60) throw std::overflow_error("thm3_yz: index too large for exact form");
  Rational y = epsilon * van_der_corput(n);
  Rational z = gamma + y + Rational(1, std::int64_t(3) << level);
  return {y, z};
}

GeneratedSequence thm3_interleaved(std::size_t count, const Rational& gamma,
                                   const Rational& epsilon) {
  validate_thm3_params(gamma, epsilon);
  GeneratedSequence out;
  out.spec.kind = SequenceKind::thm3_interleaved;
  out.spec.gamma = gamma;
  out.spec.epsilon = epsilon;
  out.exact_mode = true;
  out.exact.reserve(count);

  std::vector<std::pair<Rational, Rational>> yz;
  auto ensure = [&](std::uint64_t upto) {
    while (yz.size() < upto) yz.push_back(thm3_yz(yz.size() + 1, gamma, epsilon));
  };
  auto push_pair = [&](std::uint64_t i) {
    if (out.exact.size() < count) out.exact.push_back(yz[i - 1].first);
    if (out.exact.size() < count) out.exact.push_back(yz[i - 1].second);
  };

  if (count > 0) {
    ensure(2);
    for (std::uint64_t i = 1; i <= 2 && out.exact.size() < count; ++i) push_pair(i);
    // After level N the sequence holds 2N*2^N terms: first the tuple
    // (y_1,z_1,...,y_{2^N},z_{2^N}) once, then the fresh half of the next
    // block repeated N+1 times.
    for (std::uint64_t level = 1; out.exact.size() < count; ++level) {
      std::uint64_t half = 1ull << level;
      ensure(2 * half);
      for (std::uint64_t i = 1; i <= half && out.exact.size() < count; ++i) push_pair(i);
      for (std::uint64_t rep = 0; rep <= level && out.exact.size() < count; ++rep)
        for (std::uint64_t i = half + 1; i <= 2 * half && out.exact.size() < count; ++i)
          push_pair(i);
    }
  }

  out.values.reserve(out.exact.size());
  for (const auto& r : out.exact) out.values.push_back(r.to_double());
  return out;
}

GridSets thm3_grid_sets(unsigned level, const Rational& gamma, const Rational& epsilon) {
  if (!(gamma == kHalf && epsilon == kHalf))
    throw std::invalid_argument("thm3_grid_sets: defined only for gamma = 1/2, epsilon = 1/2");
  if (level > 40) throw std::overflow_error("thm3_grid_sets: level too large");
  const auto denom = static_cast<std::int64_t>(1ull << (level + 2));
  const std::uint64_t jmax = 1ull << (level + 1);

  GridSets out;
  out.y.reserve(jmax);
  for (std::uint64_t j = 0; j < jmax; ++j)
    out.y.push_back(Rational(static_cast<std::int64_t>(j), denom));

  const Rational one(1);
  out.z.reserve(jmax * (level + 2));
  for (std::uint64_t j = 0; j < jmax; ++j) {
    for (unsigned k = 0; k <= level + 1; ++k) {
      Rational v = kHalf + Rational(static_cast<std::int64_t>(j), denom) +
                   Rational(1, std::int64_t(3) << k);
      if (v <= one) out.z.push_back(v);
    }
  }
  std::sort(out.z.begin(), out.z.end());
  out.z.erase(std::unique(out.z.begin(), out.z.end()), out.z.end());
  return out;
}

unsigned prefix_grid_level(std::size_t count) {
  for (unsigned level = 1; level < 55; ++level) {
    std::uint64_t cap = std::uint64_t(level + 1) << (level + 2);  // 2(N+1)*2^(N+1)
    if (count <= cap) return level;
  }
  throw std::overflow_error("prefix_grid_level: count too large");
}

GeneratedSequence thm4_doubled(const GeneratedSequence& base, double gamma2) {
  if (base.size() == 0) throw std::invalid_argument("thm4_doubled: base sequence is empty");
  GeneratedSequence out;
  out.spec.kind = SequenceKind::thm4_doubled;
  out.spec.base = std::make_shared<SequenceSpec>(base.spec);
  out.spec.gamma2 = gamma2;
  out.values.reserve(2 * base.size());
  for (double v : base.values) {
    out.values.push_back(v);
    out.values.push_back(frac_unit(v + gamma2));
  }
  return out;
}

std::vector<double> sample_density(const PiecewiseConstantDensity& g, std::size_t count,
                                   std::uint64_t seed) {
  const auto& b = g.breakpoints();
  const auto& v = g.values();
  std::vector<double> cum(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) cum[i + 1] = cum[i] + v[i] * (b[i + 1] - b[i]);
  const double total = cum.back();

  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double target = rng.uniform01() * total;
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    auto idx = static_cast<std::size_t>(it - cum.begin());
    if (idx > v.size()) idx = v.size();
    std::size_t j = idx - 1;
    double x = b[j] + (target - cum[j]) / v[j];
    if (x >= b[j + 1]) x = std::nextafter(b[j + 1], b[j]);
    out.push_back(x);
  }
  return out;
}

GeneratedSequence dilated_sequence(std::uint64_t multiplier, double x, std::size_t count) {
  if (multiplier == 0) throw std::invalid_argument("dilated_sequence: multiplier must be positive");
  GeneratedSequence out;
  out.spec.kind = SequenceKind::dilated;
  out.spec.multiplier = multiplier;
  out.spec.x = x;
  out.values.reserve(count);
  for (std::size_t n = 1; n <= count; ++n)
    out.values.push_back(frac_unit(static_cast<double>(multiplier) * static_cast<double>(n) * x));
  return out;
}

GeneratedSequence generate(const SequenceSpec& spec, std::size_t count) {
  spec.validate();
  switch (spec.kind) {
    case SequenceKind::vdc: {
      GeneratedSequence out;
      out.spec = spec;
      out.exact_mode = true;
      out.exact.reserve(count);
      out.values.reserve(count);
      for (std::size_t n = 1; n <= count; ++n) {
        out.exact.push_back(van_der_corput(n));
        out.values.push_back(out.exact.back().to_double());
      }
      return out;
    }
    case SequenceKind::iid_uniform: {
      GeneratedSequence out;
      out.spec = spec;
      out.values = sample_density(PiecewiseConstantDensity::uniform(), count, *spec.seed);
      return out;
    }
    case SequenceKind::iid_density: {
      GeneratedSequence out;
      out.spec = spec;
      out.values = sample_density(*spec.density, count, *spec.seed);
      return out;
    }
    case SequenceKind::thm3_interleaved: {
      GeneratedSequence out = thm3_interleaved(count, spec.gamma, spec.epsilon);
      out.spec = spec;
      return out;
    }
    case SequenceKind::thm4_doubled: {
      std::size_t base_count = (count + 1) / 2;
      GeneratedSequence base = generate(*spec.base, base_count);
      GeneratedSequence out = count == 0 ? GeneratedSequence{} : thm4_doubled(base, spec.gamma2);
      out.values.resize(count);
      out.spec = spec;
      return out;
    }
    case SequenceKind::dilated: {
      GeneratedSequence out = dilated_sequence(spec.multiplier, spec.x, count);
      out.spec = spec;
      return out;
    }
  }
  throw std::logic_error("generate: unhandled kind");
}

}  // namespace ppc
