// Command-line front end for the pair-correlation toolkit.
//
//   ppc r2               run an R2 experiment from a config/flags
//   ppc theorem <name>   canned constructions: thm1 | thm3 | thm4 | doubling
//   ppc verify           exact invariant suite; exit 0 iff all pass
//   ppc export-sequence  materialize a sequence as CSV
//
// All randomness flows from configured seeds; nothing is seeded from the
// clock.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ppc/format.hpp"
#include "ppc/presets.hpp"
#include "ppc/report.hpp"
#include "ppc/serialization.hpp"
#include "ppc/verify.hpp"
#include "ppc/version.hpp"

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  json j;
  f >> j;
  return j;
}

ppc::SequenceSpec parse_spec_arg(const std::string& arg) {
  // accepts inline JSON or a path to a JSON file
  std::string trimmed = arg;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.erase(trimmed.begin());
  if (!trimmed.empty() && trimmed.front() == '{')
    return ppc::spec_from_json(json::parse(trimmed));
  return ppc::spec_from_json(load_json_file(arg));
}

void emit_report(const ppc::ExperimentReport& report) {
  std::string payload = report.config.format == ppc::ReportFormat::csv
                            ? ppc::report_to_csv(report)
                            : ppc::report_to_json(report).dump(2) + "\n";
  if (report.config.output.empty()) {
    std::cout << payload;
  } else {
    ppc::write_file(report.config.output, payload);
    std::cerr << "wrote " << report.config.output << " (" << report.rows.size() << " rows)\n";
  }
}

void print_lines(const ppc::PresetResult& result) {
  for (const auto& line : result.lines)
    std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << line.name << ": " << line.detail << "\n";
}

int write_preset_report(const ppc::PresetResult& result, const std::string& output,
                        ppc::ReportFormat format) {
  if (!output.empty()) {
    std::string payload;
    if (format == ppc::ReportFormat::csv) {
      payload = "seed," + ppc::result_csv_header() + "\n";
      for (const auto& row : result.rows)
        payload += std::to_string(row.seed) + "," + ppc::result_csv_row(row.result) + "\n";
    } else {
      json rows = json::array();
      for (const auto& row : result.rows) {
        json r{{"seed", row.seed},     {"n", row.result.n},
               {"gamma", row.result.gamma}, {"s", row.result.s},
               {"count", row.result.count}, {"r2", row.result.r2}};
        if (row.result.expected) r["expected"] = *row.result.expected;
        rows.push_back(std::move(r));
      }
      payload = json{{"schema_version", 1}, {"rows", rows}}.dump(2) + "\n";
    }
    ppc::write_file(output, payload);
  }
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair correlation statistics toolkit"};
  app.set_version_flag("--version", std::string(ppc::kToolVersion));
  app.require_subcommand(1);

  // ---- r2 ----
  auto* r2 = app.add_subcommand("r2", "evaluate R2(gamma; s, N) over a config grid");
  std::string r2_config_path, r2_spec_arg, r2_output, r2_format;
  std::vector<std::string> r2_gammas, r2_scales;
  std::vector<std::size_t> r2_ns;
  std::vector<std::uint64_t> r2_seeds;
  r2->add_option("--config", r2_config_path, "JSON config file; flags override its fields");
  r2->add_option("--spec", r2_spec_arg, "sequence spec: inline JSON or a file path");
  r2->add_option("--gamma", r2_gammas, "shift value (repeatable; accepts 0.25 or 1/4)");
  r2->add_option("--s", r2_scales, "scale value (repeatable)");
  r2->add_option("--n", r2_ns, "prefix length (repeatable, increasing)");
  r2->add_option("--seed", r2_seeds, "seed (repeatable)");
  r2->add_option("--output", r2_output, "output path (default: stdout)");
  r2->add_option("--format", r2_format, "csv or json");

  // ---- theorem ----
  auto* theorem = app.add_subcommand("theorem", "run a canned construction and print PASS/FAIL");
  std::string thm_name, thm_output, thm_format = "csv";
  double thm_gamma = 0.25, thm_delta = 0.0625, thm_gamma1 = 0.3, thm_gamma2 = 0.15;
  unsigned thm_level = 10;
  std::size_t thm_n = 100000, thm_seeds = 20, thm_instances = 50;
  theorem->add_option("name", thm_name, "thm1 | thm3 | thm4 | doubling")->required();
  theorem->add_option("--gamma", thm_gamma, "thm1 shift");
  theorem->add_option("--delta", thm_delta, "thm1 delta");
  theorem->add_option("--level", thm_level, "thm3 block level (prefix 2*level*2^level)");
  theorem->add_option("--gamma1", thm_gamma1, "thm4 shift with PPC");
  theorem->add_option("--gamma2", thm_gamma2, "thm4 shift without PPC");
  theorem->add_option("--n", thm_n, "sample size");
  theorem->add_option("--seeds", thm_seeds, "number of seeds");
  theorem->add_option("--instances", thm_instances, "doubling instance count");
  theorem->add_option("--output", thm_output, "write rows to this path");
  theorem->add_option("--format", thm_format, "csv or json");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the exact invariant suite");
  bool verify_quick = false, verify_json = false;
  verify->add_flag("--quick", verify_quick, "smaller grids (min-distance level 7)");
  verify->add_flag("--json", verify_json, "machine-readable failure list on stdout");

  // ---- export-sequence ----
  auto* exp = app.add_subcommand("export-sequence", "materialize a sequence as CSV");
  std::string exp_spec_arg, exp_output;
  std::size_t exp_count = 0;
  exp->add_option("--spec", exp_spec_arg, "sequence spec: inline JSON or a file path")
      ->required();
  exp->add_option("--count", exp_count, "number of points")->required();
  exp->add_option("--output", exp_output, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*r2) {
      ppc::ExperimentConfig config;
      if (!r2_config_path.empty()) config = ppc::config_from_json(load_json_file(r2_config_path));
      if (!r2_spec_arg.empty()) config.spec = parse_spec_arg(r2_spec_arg);
      if (!r2_gammas.empty()) {
        config.gammas.clear();
        for (const auto& g : r2_gammas)
          config.gammas.push_back(ppc::Rational::parse(g).to_double());
      }
      if (!r2_scales.empty()) {
        config.s_values.clear();
        for (const auto& s : r2_scales)
          config.s_values.push_back(ppc::Rational::parse(s).to_double());
      }
      if (!r2_ns.empty()) config.n_schedule = r2_ns;
      if (!r2_seeds.empty()) config.seeds = r2_seeds;
      if (config.seeds.empty() && !config.spec.is_random())
        config.seeds.push_back(0);  // deterministic kinds ignore the seed
      if (!r2_output.empty()) config.output = r2_output;
      if (!r2_format.empty()) config.format = ppc::format_from_name(r2_format);
      emit_report(ppc::run_r2(config));
      return 0;
    }

    if (*theorem) {
      ppc::PresetResult result;
      auto format = ppc::format_from_name(thm_format);
      if (thm_name == "thm1") {
        ppc::Thm1Options opt;
        opt.gamma = thm_gamma;
        opt.delta = thm_delta;
        opt.n = thm_n;
        opt.seed_count = thm_seeds;
        result = ppc::run_thm1(opt);
      } else if (thm_name == "thm3") {
        ppc::Thm3Options opt;
        opt.level = thm_level;
        result = ppc::run_thm3(opt);
      } else if (thm_name == "thm4") {
        ppc::Thm4Options opt;
        opt.gamma1 = thm_gamma1;
        opt.gamma2 = thm_gamma2;
        opt.base_n = thm_n / 2 == 0 ? 1 : thm_n / 2;
        opt.seed_count = thm_seeds;
        result = ppc::run_thm4(opt);
      } else if (thm_name == "doubling") {
        ppc::DoublingOptions opt;
        opt.instances = thm_instances;
        result = ppc::run_doubling(opt);
      } else {
        std::cerr << "unknown theorem preset '" << thm_name
                  << "' (expected thm1, thm3, thm4 or doubling)\n";
        return 2;
      }
      print_lines(result);
      return write_preset_report(result, thm_output, format);
    }

    if (*verify) {
      auto failures = ppc::run_checks(ppc::standard_checks(verify_quick));
      if (verify_json) {
        json out = json::array();
        for (const auto& f : failures) out.push_back({{"name", f.name}, {"detail", f.detail}});
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& f : failures)
          std::cout << "[FAIL] " << f.name << ": " << f.detail << "\n";
        if (failures.empty()) std::cout << "all invariants pass\n";
      }
      return failures.empty() ? 0 : 1;
    }

    if (*exp) {
      auto spec = parse_spec_arg(exp_spec_arg);
      auto seq = ppc::generate(spec, exp_count);
      std::string payload = ppc::sequence_to_csv(seq);
      if (exp_output.empty())
        std::cout << payload;
      else
        ppc::write_file(exp_output, payload);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
