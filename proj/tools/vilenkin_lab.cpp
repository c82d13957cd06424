// vilenkin-lab: run experiment configs and the invariant suite.
//
//   vilenkin-lab run <config.json> [--out PATH] [--format csv|json]
//                    [--cells-cap K] [--seed S]
//   vilenkin-lab check [--quick-perf]
//
// VILENKIN_CELL_CAP mirrors --cells-cap; the flag wins.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "criteria.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/experiments.hpp"

namespace {

std::optional<vilenkin::Index> env_cell_cap() {
    const char* env = std::getenv("VILENKIN_CELL_CAP");
    if (!env || !*env) return std::nullopt;
    return std::stoll(env);
}

int run_command(const std::string& config_path, const std::string& out_override, const std::string& format_override,
                std::optional<vilenkin::Index> cap, std::optional<std::uint64_t> seed) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "vilenkin-lab: cannot open " << config_path << '\n';
        return 1;
    }
    nlohmann::json source;
    try {
        source = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "vilenkin-lab: " << config_path << ": " << e.what() << '\n';
        return 1;
    }

    if (!cap) cap = env_cell_cap();
    std::optional<vilenkin::ExperimentConfig> config;
    try {
        config = vilenkin::parse_config(source, seed, cap);
    } catch (const vilenkin::CapacityError& e) {
        std::cerr << "vilenkin-lab: capacity: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "vilenkin-lab: invalid config: " << e.what() << '\n';
        return 1;
    }
    if (!out_override.empty()) config->output.path = out_override;
    if (!format_override.empty()) config->output.format = format_override;

    const vilenkin::RunResult result = vilenkin::run_experiment(*config);
    for (const auto& m : result.messages) std::cerr << "vilenkin-lab: " << m << '\n';

    const std::string hash = config->hash();
    const std::string body = config->output.format == "json"
                                 ? vilenkin::to_json_table(result.records, hash).dump(2) + "\n"
                                 : vilenkin::to_csv(result.records, hash);
    if (config->output.path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(config->output.path, std::ios::binary);
        if (!out) {
            std::cerr << "vilenkin-lab: cannot write " << config->output.path << '\n';
            return 1;
        }
        out << body;
    }
    return static_cast<int>(result.exit);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier analysis experiments on bounded Vilenkin groups"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run an experiment config and emit CSV/JSON");
    std::string config_path, out_path, format;
    std::optional<vilenkin::Index> cap;
    std::optional<std::uint64_t> seed;
    run->add_option("config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_path, "Output path (default: config output.path, else stdout)");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--cells-cap", cap, "Maximum M_N (default 2^22, env VILENKIN_CELL_CAP)");
    run->add_option("--seed", seed, "Override the config seed");

    auto* check = app.add_subcommand("check", "Run the full invariant and acceptance suite");
    bool quick_perf = false;
    check->add_flag("--quick-perf", quick_perf, "Relax the fast-transform speedup gate to 2x");

    CLI11_PARSE(app, argc, argv);

    if (*run) return run_command(config_path, out_path, format, cap, seed);

    vilenkin::check::Options options;
    if (quick_perf) options.min_speedup = 2.0;
    const auto results = vilenkin::check::run_all(options, std::cout);
    return vilenkin::check::all_passed(results) ? 0 : 2;
}
