#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppc/report.hpp"

namespace ppc {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PresetResult {
  std::vector<CheckLine> lines;
  std::vector<ReportRow> rows;
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Canned experiment bundles. Statistical thresholds are artifact policy at
// desk scale, printed as such; the exact checks are sharp.

struct Thm1Options {
  double gamma = 0.25;
  double delta = 0.0625;
  std::size_t n = 100000;
  std::size_t seed_count = 20;
};
PresetResult run_thm1(const Thm1Options& opt);

struct Thm3Options {
  unsigned level = 10;  // prefix length 2*level*2^level
};
PresetResult run_thm3(const Thm3Options& opt);

struct Thm4Options {
  double gamma1 = 0.3;
  double gamma2 = 0.15;
  std::size_t base_n = 50000;
  std::size_t seed_count = 10;
};
PresetResult run_thm4(const Thm4Options& opt);

struct DoublingOptions {
  std::size_t instances = 50;
  std::size_t max_n = 500;
};
PresetResult run_doubling(const DoublingOptions& opt);

}  // namespace ppc
