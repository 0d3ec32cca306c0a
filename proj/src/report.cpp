#include "ppc/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ppc/format.hpp"
#include "ppc/version.hpp"

namespace ppc {

ReportFormat format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("format: expected csv or json, got '" + name + "'");
}

const char* format_name(ReportFormat f) { return f == ReportFormat::csv ? "csv" : "json"; }

void ExperimentConfig::validate() const {
  spec.validate();
  if (gammas.empty()) throw std::invalid_argument("config.gammas: must be nonempty");
  for (double g : gammas)
    if (!(g >= 0.0 && g < 1.0))
      throw std::invalid_argument("config.gammas: values must lie in [0,1)");
  if (s_values.empty()) throw std::invalid_argument("config.s_values: must be nonempty");
  for (double s : s_values)
    if (!(s > 0.0)) throw std::invalid_argument("config.s_values: values must be positive");
  if (n_schedule.empty()) throw std::invalid_argument("config.n_schedule: must be nonempty");
  for (std::size_t i = 0; i < n_schedule.size(); ++i) {
    if (n_schedule[i] < 2) throw std::invalid_argument("config.n_schedule: entries must be >= 2");
    if (i > 0 && n_schedule[i] <= n_schedule[i - 1])
      throw std::invalid_argument("config.n_schedule: must be strictly increasing");
  }
  if (seeds.empty()) throw std::invalid_argument("config.seeds: must be nonempty");
}

std::optional<PiecewiseConstantDensity> density_model_for(const SequenceSpec& spec) {
  switch (spec.kind) {
    case SequenceKind::iid_uniform:
      return PiecewiseConstantDensity::uniform();
    case SequenceKind::iid_density:
      return spec.density;
    default:
      return std::nullopt;
  }
}

ExperimentReport run_r2(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = config;
  report.generator_id = kGeneratorId;
  report.tool_version = kToolVersion;

  const std::optional<PiecewiseConstantDensity> model = density_model_for(config.spec);
  const std::size_t max_n = config.n_schedule.back();

  for (std::uint64_t seed : config.seeds) {
    SequenceSpec spec = config.spec;
    if (spec.is_random()) spec.seed = seed;
    GeneratedSequence seq = generate(spec, max_n);
    for (double gamma : config.gammas) {
      for (double s : config.s_values) {
        for (std::size_t len : config.n_schedule) {
          PairCountResult res;
          if (seq.is_exact()) {
            std::span<const Rational> prefix(seq.exact.data(), len);
            res = r2_count_exact(prefix, Rational::from_double(gamma),
                                 Rational::from_double(s));
          } else {
            std::span<const double> prefix(seq.values.data(), len);
            res = r2_count_fast(prefix, gamma, s);
          }
          if (model) res.expected = 2.0 * s * density_overlap(*model, gamma);
          report.rows.push_back({seed, res});
        }
      }
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

std::string result_csv_header() { return "n,gamma,s,count,r2,expected,abs_err"; }

std::string result_csv_row(const PairCountResult& r) {
  std::string line = std::to_string(r.n) + "," + fmt_double(r.gamma) + "," + fmt_double(r.s) +
                     "," + std::to_string(r.count) + "," + fmt_double(r.r2) + ",";
  if (r.expected) {
    line += fmt_double(*r.expected) + "," + fmt_double(std::fabs(r.r2 - *r.expected));
  } else {
    line += ",";
  }
  return line;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::string out = "seed," + result_csv_header() + "\n";
  for (const auto& row : report.rows)
    out += std::to_string(row.seed) + "," + result_csv_row(row.result) + "\n";
  return out;
}

std::string sequence_to_csv(const GeneratedSequence& seq) {
  std::string out;
  if (seq.is_exact()) {
    for (const auto& r : seq.exact) out += r.str() + "\n";
  } else {
    for (double v : seq.values) out += fmt_double(v) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << contents;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace ppc
