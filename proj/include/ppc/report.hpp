#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppc/pair_correlation.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

enum class ReportFormat { csv, json };

ReportFormat format_from_name(const std::string& name);
const char* format_name(ReportFormat f);

// One r2 experiment: a sequence spec evaluated on prefixes at every
// (seed, gamma, s, N) cell. Output row order follows config order.
struct ExperimentConfig {
  SequenceSpec spec;
  std::vector<double> gammas;
  std::vector<double> s_values;
  std::vector<std::size_t> n_schedule;
  std::vector<std::uint64_t> seeds;
  std::string output;
  ReportFormat format = ReportFormat::csv;

  void validate() const;  // throws std::invalid_argument naming the field
};

struct ReportRow {
  std::uint64_t seed = 0;
  PairCountResult result;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::string generator_id;
  std::string tool_version;
  double wall_ms = 0.0;
};

ExperimentReport run_r2(const ExperimentConfig& config);

// CSV with header seed,n,gamma,s,count,r2,expected,abs_err. Deterministic:
// identical configs give byte-identical output.
std::string report_to_csv(const ExperimentReport& report);

// Single-result row in the stats CSV schema (n,gamma,s,count,r2,expected,abs_err).
std::string result_csv_header();
std::string result_csv_row(const PairCountResult& r);

// CSV export of a generated sequence, one point per line; exact points are
// written "p/q".
std::string sequence_to_csv(const GeneratedSequence& seq);

// The density model implied by a spec, when the i.i.d. limit applies.
std::optional<PiecewiseConstantDensity> density_model_for(const SequenceSpec& spec);

void write_file(const std::string& path, const std::string& contents);

}  // namespace ppc
