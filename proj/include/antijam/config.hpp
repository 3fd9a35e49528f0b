#pragma once

#include "antijam/engine.hpp"
#include "antijam/metrics.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace antijam {

std::string to_string(Protocol protocol);
Protocol protocol_from_string(std::string_view s); // throws ConfigError

std::string to_string(JamStrategy strategy);
JamStrategy strategy_from_string(std::string_view s); // throws ConfigError

// Flat JSON form of a SimConfig. Keys: n, steps, seed, protocol, strategy, T,
// epsilon, and the protocol-specific parameters (gamma / p_hat / initial_p /
// initial_T for antijam, cw_min / cw_max for dcf). Serialization materializes
// every default; parsing rejects unknown keys.
nlohmann::json config_to_json(const SimConfig& config);
SimConfig config_from_json(const nlohmann::json& j); // throws ConfigError

// MetricsReport as a JSON object; missing metrics serialize as null, the
// fairness histogram as an object keyed by bin lower bound. The echoed config
// rides along under "config".
nlohmann::json report_to_json(const MetricsReport& report, const SimConfig& config);
MetricsReport report_from_json(const nlohmann::json& j);

} // namespace antijam
