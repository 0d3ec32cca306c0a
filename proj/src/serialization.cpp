#include "ppc/serialization.hpp"

#include <cmath>
#include <stdexcept>

#include "ppc/format.hpp"

namespace ppc {

namespace {

using nlohmann::json;

double number_from(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return Rational::parse(j.get<std::string>()).to_double();
  throw std::invalid_argument(std::string(what) + ": expected number or numeric string");
}

Rational rational_from(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return Rational::from_double(j.get<double>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument(std::string(what) + ": expected number or string like \"1/2\"");
}

}  // namespace

json density_to_json(const PiecewiseConstantDensity& g) {
  json breaks = json::array();
  json values = json::array();
  for (double b : g.breakpoints()) breaks.push_back(fmt_double(b));
  for (double v : g.values()) values.push_back(fmt_double(v));
  return json{{"breakpoints", breaks}, {"values", values}};
}

PiecewiseConstantDensity density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    throw std::invalid_argument("density: expected {\"breakpoints\": [...], \"values\": [...]}");
  std::vector<double> breaks, values;
  for (const auto& b : j.at("breakpoints")) breaks.push_back(number_from(b, "density.breakpoints"));
  for (const auto& v : j.at("values")) values.push_back(number_from(v, "density.values"));
  return {std::move(breaks), std::move(values)};
}

json spec_to_json(const SequenceSpec& spec) {
  json j{{"kind", kind_name(spec.kind)}};
  switch (spec.kind) {
    case SequenceKind::vdc:
      break;
    case SequenceKind::iid_uniform:
      break;
    case SequenceKind::iid_density:
      if (spec.density) j["density"] = density_to_json(*spec.density);
      break;
    case SequenceKind::thm3_interleaved:
      j["gamma"] = spec.gamma.str();
      j["epsilon"] = spec.epsilon.str();
      break;
    case SequenceKind::thm4_doubled:
      if (spec.base) j["base"] = spec_to_json(*spec.base);
      j["gamma2"] = spec.gamma2;
      break;
    case SequenceKind::dilated:
      j["multiplier"] = spec.multiplier;
      j["x"] = spec.x;
      break;
  }
  if (spec.seed) j["seed"] = *spec.seed;
  return j;
}

SequenceSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("spec: expected an object with a \"kind\" field");
  SequenceSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("gamma")) spec.gamma = rational_from(j.at("gamma"), "spec.gamma");
  if (j.contains("epsilon")) spec.epsilon = rational_from(j.at("epsilon"), "spec.epsilon");
  if (j.contains("density")) spec.density = density_from_json(j.at("density"));
  if (j.contains("base")) spec.base = std::make_shared<SequenceSpec>(spec_from_json(j.at("base")));
  if (j.contains("gamma2")) spec.gamma2 = number_from(j.at("gamma2"), "spec.gamma2");
  if (j.contains("multiplier")) spec.multiplier = j.at("multiplier").get<std::uint64_t>();
  if (j.contains("x")) spec.x = number_from(j.at("x"), "spec.x");
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  spec.validate();
  return spec;
}

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["spec"] = spec_to_json(config.spec);
  j["gammas"] = config.gammas;
  j["s_values"] = config.s_values;
  j["n_schedule"] = config.n_schedule;
  j["seeds"] = config.seeds;
  j["output"] = config.output;
  j["format"] = format_name(config.format);
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected an object");
  ExperimentConfig config;
  if (j.contains("spec")) config.spec = spec_from_json(j.at("spec"));
  if (j.contains("gammas"))
    for (const auto& g : j.at("gammas")) config.gammas.push_back(number_from(g, "config.gammas"));
  if (j.contains("s_values"))
    for (const auto& s : j.at("s_values"))
      config.s_values.push_back(number_from(s, "config.s_values"));
  if (j.contains("n_schedule"))
    for (const auto& n : j.at("n_schedule"))
      config.n_schedule.push_back(n.get<std::size_t>());
  if (j.contains("seeds"))
    for (const auto& s : j.at("seeds")) config.seeds.push_back(s.get<std::uint64_t>());
  if (j.contains("output")) config.output = j.at("output").get<std::string>();
  if (j.contains("format")) config.format = format_from_name(j.at("format").get<std::string>());
  return config;
}

json report_to_json(const ExperimentReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r{{"seed", row.seed},
           {"n", row.result.n},
           {"gamma", row.result.gamma},
           {"s", row.result.s},
           {"count", row.result.count},
           {"r2", row.result.r2}};
    if (row.result.expected) {
      r["expected"] = *row.result.expected;
      r["abs_err"] = std::fabs(row.result.r2 - *row.result.expected);
    }
    rows.push_back(std::move(r));
  }
  return json{{"schema_version", 1},
              {"metadata",
               {{"config", config_to_json(report.config)},
                {"generator", report.generator_id},
                {"tool_version", report.tool_version},
                {"wall_ms", report.wall_ms}}},
              {"rows", rows}};
}

}  // namespace ppc
