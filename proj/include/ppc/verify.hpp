#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ppc {

// A named exact invariant. run() returns nullopt on success, otherwise a
// short failure description.
struct VerifyCheck {
  std::string name;
  std::function<std::optional<std::string>()> run;
};

struct VerifyFailure {
  std::string name;
  std::string detail;
};

std::vector<VerifyFailure> run_checks(const std::vector<VerifyCheck>& checks);

// The standard exact invariant suite: kernel oracle equivalence, shift
// symmetry, saturation, monotonicity, the doubling identity, grid
// min-distance (levels up to 10, or 7 in quick mode), the interleaved
// zero-count and the van der Corput prefix structure.
std::vector<VerifyCheck> standard_checks(bool quick = false);

}  // namespace ppc
