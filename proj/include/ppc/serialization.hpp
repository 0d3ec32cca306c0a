#pragma once

#include <json.hpp>

#include "ppc/density.hpp"
#include "ppc/report.hpp"
#include "ppc/sequence.hpp"

namespace ppc {

// Densities travel as {"breakpoints": [...], "values": [...]} where entries
// are decimal strings (exact rationals also accepted as "p/q" on input).
nlohmann::json density_to_json(const PiecewiseConstantDensity& g);
PiecewiseConstantDensity density_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const SequenceSpec& spec);
SequenceSpec spec_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ExperimentReport& report);

}  // namespace ppc
