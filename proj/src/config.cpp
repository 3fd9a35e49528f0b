#include "antijam/config.hpp"

#include <set>

namespace antijam {

std::string to_string(Protocol protocol) {
    return protocol == Protocol::AntiJam ? "antijam" : "dcf";
}

Protocol protocol_from_string(std::string_view s) {
    if (s == "antijam") return Protocol::AntiJam;
    if (s == "dcf") return Protocol::Dcf;
    throw ConfigError("unknown protocol '" + std::string(s) + "' (expected antijam|dcf)");
}

std::string to_string(JamStrategy strategy) {
    switch (strategy) {
    case JamStrategy::BusyProb:
        return "busy-prob";
    case JamStrategy::BusyDet:
        return "busy-det";
    case JamStrategy::IdleDet:
        return "idle-det";
    case JamStrategy::NoJam:
    default:
        return "none";
    }
}

JamStrategy strategy_from_string(std::string_view s) {
    if (s == "busy-prob") return JamStrategy::BusyProb;
    if (s == "busy-det") return JamStrategy::BusyDet;
    if (s == "idle-det") return JamStrategy::IdleDet;
    if (s == "none") return JamStrategy::NoJam;
    throw ConfigError("unknown strategy '" + std::string(s) +
                      "' (expected busy-prob|busy-det|idle-det|none)");
}

nlohmann::json config_to_json(const SimConfig& config) {
    nlohmann::json j;
    j["n"] = config.n;
    j["steps"] = config.steps;
    j["seed"] = config.seed;
    j["protocol"] = to_string(config.protocol());
    j["strategy"] = to_string(config.adversary.strategy);
    j["T"] = config.adversary.window;
    j["epsilon"] = config.adversary.epsilon;
    if (config.protocol() == Protocol::AntiJam) {
        const ProtocolParams& pp = config.antijam_params();
        j["gamma"] = pp.gamma;
        j["p_hat"] = pp.p_hat;
        j["initial_p"] = pp.initial_p.value_or(pp.p_hat);
        j["initial_T"] = pp.initial_T.value_or(1);
    } else {
        const DcfParams& dp = config.dcf_params();
        j["cw_min"] = dp.cw_min;
        j["cw_max"] = dp.cw_max;
    }
    return j;
}

namespace {

template <typename T>
T require_number(const nlohmann::json& j, const char* key) {
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    }
    return j.at(key).get<T>();
}

} // namespace

SimConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    static const std::set<std::string> known = {
        "n",     "steps", "seed",  "protocol",  "strategy",  "T",      "epsilon",
        "gamma", "p_hat", "initial_p", "initial_T", "cw_min", "cw_max"};
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    SimConfig config;
    const Protocol protocol =
        j.contains("protocol") ? protocol_from_string(j.at("protocol").get<std::string>())
                               : Protocol::AntiJam;
    if (protocol == Protocol::AntiJam) {
        ProtocolParams pp;
        if (j.contains("gamma")) pp.gamma = require_number<double>(j, "gamma");
        if (j.contains("p_hat")) pp.p_hat = require_number<double>(j, "p_hat");
        if (j.contains("initial_p") && !j.at("initial_p").is_null()) {
            pp.initial_p = require_number<double>(j, "initial_p");
        }
        if (j.contains("initial_T") && !j.at("initial_T").is_null()) {
            pp.initial_T = require_number<std::int64_t>(j, "initial_T");
        }
        config.params = pp;
    } else {
        DcfParams dp;
        if (j.contains("cw_min")) dp.cw_min = require_number<std::int64_t>(j, "cw_min");
        if (j.contains("cw_max")) dp.cw_max = require_number<std::int64_t>(j, "cw_max");
        config.params = dp;
    }

    try {
        if (j.contains("n")) config.n = require_number<std::int64_t>(j, "n");
        if (j.contains("steps")) config.steps = require_number<std::int64_t>(j, "steps");
        if (j.contains("seed")) config.seed = require_number<std::uint64_t>(j, "seed");
        if (j.contains("strategy")) {
            config.adversary.strategy = strategy_from_string(j.at("strategy").get<std::string>());
        }
        if (j.contains("T")) config.adversary.window = require_number<std::int64_t>(j, "T");
        if (j.contains("epsilon")) config.adversary.epsilon = require_number<double>(j, "epsilon");
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return config;
}

nlohmann::json report_to_json(const MetricsReport& report, const SimConfig& config) {
    nlohmann::json j;
    j["throughput"] = report.throughput;
    j["all_jammed"] = report.all_jammed;
    j["non_jammed"] = report.non_jammed;
    j["successes"] = report.successes;
    j["convergence_slot"] =
        report.convergence_slot ? nlohmann::json(*report.convergence_slot) : nlohmann::json();
    j["band_fraction"] =
        report.band_fraction ? nlohmann::json(*report.band_fraction) : nlohmann::json();
    j["throughput_post_convergence"] = report.throughput_post_convergence
                                           ? nlohmann::json(*report.throughput_post_convergence)
                                           : nlohmann::json();
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [bin, count] : report.fairness_histogram) {
        histogram[std::to_string(bin)] = count;
    }
    j["fairness_histogram"] = histogram;
    j["jain_index"] = report.jain_index;
    j["config"] = config_to_json(config);
    return j;
}

MetricsReport report_from_json(const nlohmann::json& j) {
    MetricsReport report;
    try {
        report.throughput = j.at("throughput").get<double>();
        report.all_jammed = j.at("all_jammed").get<bool>();
        report.non_jammed = j.at("non_jammed").get<std::int64_t>();
        report.successes = j.at("successes").get<std::int64_t>();
        if (!j.at("convergence_slot").is_null()) {
            report.convergence_slot = j.at("convergence_slot").get<std::int64_t>();
        }
        if (!j.at("band_fraction").is_null()) {
            report.band_fraction = j.at("band_fraction").get<double>();
        }
        if (!j.at("throughput_post_convergence").is_null()) {
            report.throughput_post_convergence = j.at("throughput_post_convergence").get<double>();
        }
        for (const auto& [key, value] : j.at("fairness_histogram").items()) {
            report.fairness_histogram[std::stoll(key)] = value.get<std::int64_t>();
        }
        report.jain_index = j.at("jain_index").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
    return report;
}

} // namespace antijam
