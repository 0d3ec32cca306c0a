#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppc/circle.hpp"
#include "ppc/density.hpp"
#include "ppc/rational.hpp"

namespace ppc {

enum class SequenceKind {
  vdc,              // binary van der Corput, exact
  iid_uniform,      // i.i.d. uniform on [0,1), seeded
  iid_density,      // i.i.d. from a piecewise-constant density, seeded
  thm3_interleaved, // recursive y/z interleaving, exact
  thm4_doubled,     // base sequence interleaved with its shift by gamma2
  dilated,          // {multiplier * n * x} mod 1
};

const char* kind_name(SequenceKind k);
SequenceKind kind_from_name(const std::string& name);

// Declarative description of a generator. Random kinds must carry a seed;
// deterministic kinds ignore it.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::iid_uniform;

  Rational gamma{1, 2};    // thm3_interleaved
  Rational epsilon{1, 2};  // thm3_interleaved

  std::optional<PiecewiseConstantDensity> density;  // iid_density

  std::shared_ptr<SequenceSpec> base;  // thm4_doubled
  double gamma2 = 0.0;                 // thm4_doubled

  std::uint64_t multiplier = 1;  // dilated
  double x = 0.0;                // dilated

  std::optional<std::uint64_t> seed;

  bool is_random() const;
  bool is_exact() const;
  void validate() const;  // throws std::invalid_argument
};

struct GeneratedSequence {
  SequenceSpec spec;
  std::vector<double> values;   // always populated, all in [0,1)
  std::vector<Rational> exact;  // parallel to values for exact kinds, else empty
  bool exact_mode = false;

  std::size_t size() const { return values.size(); }
  bool is_exact() const { return exact_mode; }
  CirclePoint point(std::size_t i) const {
    return exact_mode ? CirclePoint::exact(exact[i]) : CirclePoint::approx(values[i]);
  }
};

// n-th term of the binary van der Corput sequence (n >= 1): the bits of n-1
// reflected across the radix point. Exact.
Rational van_der_corput(std::uint64_t n);

// Block index N(n) = ceil(log2 n), with N(1) = 0.
unsigned block_level(std::uint64_t n);

// (y_n, z_n) with y_n = eps*c_n and z_n = gamma + y_n + 1/(3*2^N(n)).
// Valid parameters: gamma = eps = 1/2, or gamma < 1/2 with eps = 2^-i,
// eps < min{(1/2)(1/2-gamma), gamma}.
std::pair<Rational, Rational> thm3_yz(std::uint64_t n, const Rational& gamma,
                                      const Rational& epsilon);

// First `count` terms of the recursive interleaving of (y_n) and (z_n).
GeneratedSequence thm3_interleaved(std::size_t count, const Rational& gamma,
                                   const Rational& epsilon);

// The finite grids containing every point of an interleaved prefix
// (gamma = 1/2 only):
//   Y_N = { j/2^(N+2) : 0 <= j < 2^(N+1) }
//   Z_N = { 1/2 + j/2^(N+2) + 1/(3*2^k) : 0 <= j < 2^(N+1), 0 <= k <= N+1 } intersect [1/2,1]
struct GridSets {
  std::vector<Rational> y;
  std::vector<Rational> z;
};
GridSets thm3_grid_sets(unsigned level, const Rational& gamma, const Rational& epsilon);

// Smallest N >= 1 with count <= 2(N+1)2^(N+1); a prefix of that length is
// contained in Y_N union Z_N.
unsigned prefix_grid_level(std::size_t count);

// Interleaves x_n with {x_n + gamma2}: output 2*len(base) points.
GeneratedSequence thm4_doubled(const GeneratedSequence& base, double gamma2);

// Seeded i.i.d. draws via the inverse CDF of g. Identical (g, seed) gives
// bit-identical output.
std::vector<double> sample_density(const PiecewiseConstantDensity& g, std::size_t count,
                                   std::uint64_t seed);

// ({multiplier * n * x})_{n=1..count}
GeneratedSequence dilated_sequence(std::uint64_t multiplier, double x, std::size_t count);

// Materializes `count` points of the described sequence.
GeneratedSequence generate(const SequenceSpec& spec, std::size_t count);

}  // namespace ppc
