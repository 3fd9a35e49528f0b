// Experiment runner for the AntiJam MAC simulator: single runs, parameter
// sweeps and the analytical verification suite.

#include "antijam/config.hpp"
#include "antijam/runner.hpp"
#include "antijam/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitVerifyFailure = 3;

struct CommonFlags {
    std::string config_file;
    std::int64_t n = 0;
    std::int64_t steps = 0;
    std::uint64_t seed = 0;
    std::string protocol;
    std::string strategy;
    double epsilon = 0.0;
    std::int64_t window = 0;
    double gamma = 0.0;
    double p_hat = 0.0;
    std::int64_t cw_min = 0;
    std::int64_t cw_max = 0;
    std::string out_dir = "out";
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--config", flags.config_file, "JSON config file; flags override its values");
    cmd.add_option("--n", flags.n, "node count");
    cmd.add_option("--steps", flags.steps, "slots to simulate");
    cmd.add_option("--seed", flags.seed, "64-bit PRNG seed");
    cmd.add_option("--protocol", flags.protocol, "antijam|dcf");
    cmd.add_option("--strategy", flags.strategy, "busy-prob|busy-det|idle-det|none");
    cmd.add_option("--epsilon", flags.epsilon, "adversary epsilon in (0,1]");
    cmd.add_option("--window-T", flags.window, "adversary window T");
    cmd.add_option("--gamma", flags.gamma, "antijam multiplicative step");
    cmd.add_option("--p-hat", flags.p_hat, "antijam probability cap");
    cmd.add_option("--cw-min", flags.cw_min, "dcf initial contention window");
    cmd.add_option("--cw-max", flags.cw_max, "dcf contention window cap");
    cmd.add_option("--out", flags.out_dir, "output directory");
}

antijam::SimConfig build_config(const CLI::App& cmd, const CommonFlags& flags) {
    antijam::SimConfig config;
    if (!flags.config_file.empty()) {
        std::ifstream in(flags.config_file);
        if (!in) {
            throw antijam::ConfigError("cannot read config file '" + flags.config_file + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw antijam::ConfigError(std::string("config file is not valid JSON: ") + e.what());
        }
        config = antijam::config_from_json(j);
    }

    const auto passed = [&](const std::string& name) { return cmd.count(name) > 0; };

    if (passed("--protocol")) {
        const auto protocol = antijam::protocol_from_string(flags.protocol);
        if (protocol != config.protocol()) {
            config.params = protocol == antijam::Protocol::AntiJam
                                ? std::variant<antijam::ProtocolParams, antijam::DcfParams>(
                                      antijam::ProtocolParams{})
                                : antijam::DcfParams{};
        }
    }
    if (passed("--n")) config.n = flags.n;
    if (passed("--steps")) config.steps = flags.steps;
    if (passed("--seed")) config.seed = flags.seed;
    if (passed("--strategy")) {
        config.adversary.strategy = antijam::strategy_from_string(flags.strategy);
    }
    if (passed("--epsilon")) config.adversary.epsilon = flags.epsilon;
    if (passed("--window-T")) config.adversary.window = flags.window;

    if (config.protocol() == antijam::Protocol::AntiJam) {
        auto pp = config.antijam_params();
        if (passed("--gamma")) pp.gamma = flags.gamma;
        if (passed("--p-hat")) pp.p_hat = flags.p_hat;
        config.params = pp;
    } else {
        auto dp = config.dcf_params();
        if (passed("--cw-min")) dp.cw_min = flags.cw_min;
        if (passed("--cw-max")) dp.cw_max = flags.cw_max;
        config.params = dp;
    }

    config.validate();
    if (config.protocol() == antijam::Protocol::AntiJam &&
        config.antijam_params().outside_analyzed_regime()) {
        std::cerr << "warning: p_hat = " << config.antijam_params().p_hat
                  << " is above 1/24, outside the analyzed regime\n";
    }
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slotted-channel simulator for the AntiJam MAC protocol under reactive jamming"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string node_state_csv;
    CLI::App* run_cmd = app.add_subcommand("run", "execute a single run; writes trace.csv and report.json");
    add_common_flags(*run_cmd, run_flags);
    run_cmd->add_option("--node-states", node_state_csv,
                        "also dump per-slot node states (antijam only) to this CSV file");

    CommonFlags sweep_flags;
    std::string axis = "n";
    std::vector<std::string> values;
    std::int64_t reps = 10;
    std::uint64_t seed_base = 1;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run one parameter axis; writes sweep.csv");
    add_common_flags(*sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--axis", axis, "n|epsilon|gamma|p_hat|strategy")->required();
    sweep_cmd->add_option("--values", values, "axis values")->required()->delimiter(',');
    sweep_cmd->add_option("--reps", reps, "repetitions per value");
    sweep_cmd->add_option("--seed-base", seed_base, "base seed; each row derives its own");
    unsigned threads = 0;
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    std::uint64_t verify_seed = 0x5eedULL;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the analytical property suite; nonzero exit on violation");
    verify_cmd->add_option("--seed", verify_seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run_cmd->parsed()) {
            const antijam::SimConfig config = build_config(*run_cmd, run_flags);
            std::optional<std::filesystem::path> states_path;
            if (!node_state_csv.empty()) {
                states_path = node_state_csv;
            }
            const auto artifacts = antijam::run_single(config, run_flags.out_dir, states_path);
            std::cout << "wrote " << artifacts.trace_csv.string() << " and "
                      << artifacts.report_json.string() << '\n';
        } else if (sweep_cmd->parsed()) {
            antijam::SweepSpec spec;
            spec.base = build_config(*sweep_cmd, sweep_flags);
            spec.axis = antijam::axis_from_string(axis);
            spec.values = values;
            spec.repetitions = reps;
            spec.seed_base = seed_base;
            const auto csv = antijam::run_sweep_to_dir(spec, sweep_flags.out_dir, threads);
            std::cout << "wrote " << csv.string() << '\n';
        } else if (verify_cmd->parsed()) {
            const auto results = antijam::run_verify_suite(verify_seed);
            bool all_passed = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail
                          << '\n';
                all_passed = all_passed && r.passed;
            }
            if (!all_passed) {
                return kExitVerifyFailure;
            }
        }
    } catch (const antijam::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitOk;
}
