#pragma once

// Config-driven experiment runner behind the vilenkin-lab CLI.
//
// Config (JSON):
//   {
//     "structure":  {"m": [...]} | {"pattern": [...], "repeat_to": N},
//     "resolution": N,
//     "p_values":   [p, ...],            subset of (0, 1]
//     "experiment": "gram" | "kernels" | "convergence" | "counterexample-2a"
//                 | "counterexample-2b" | "kernel-scan" | "maximal-bound",
//     "parameters": {...},               experiment specific
//     "output":     {"path": "...", "format": "csv" | "json"},
//     "seed":       64-bit integer
//   }
//
// Exit codes: 0 success, 2 an assertion-grade check failed, 3 capacity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vilenkin/random.hpp"
#include "vilenkin/record.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

inline constexpr Index kDefaultCellCap = Index{1} << 22;
inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { ok = 0, check_failed = 2, capacity = 3 };

struct OutputSpec {
    std::string path;
    std::string format = "csv";
};

struct ExperimentConfig {
    explicit ExperimentConfig(Structure vs) : structure(std::move(vs)) {}

    Structure structure;
    std::vector<double> p_values;
    std::string experiment;
    nlohmann::json parameters = nlohmann::json::object();
    OutputSpec output;
    std::uint64_t seed = 1;
    Index cell_cap = kDefaultCellCap;

    int resolution() const noexcept { return structure.resolution(); }
    // FNV-1a 64 of the canonical (key-sorted) config with the effective seed,
    // excluding "output"; 16 lowercase hex digits.
    std::string hash() const;

    nlohmann::json canonical;  // parsed source, used for hashing
};

// Throws ValidationError on malformed configs; applies the overrides
// before hashing.
ExperimentConfig parse_config(const nlohmann::json& j, std::optional<std::uint64_t> seed_override = std::nullopt,
                              std::optional<Index> cell_cap = std::nullopt);

struct RunResult {
    std::vector<ExperimentRecord> records;
    ExitCode exit = ExitCode::ok;
    std::vector<std::string> messages;
};

// Dispatches on config.experiment.  Capacity errors become exit 3 with a
// message; failed checks set exit 2.  Records come back sorted.
RunResult run_experiment(const ExperimentConfig& config);

RunResult run_gram(const ExperimentConfig& config);
RunResult run_kernels(const ExperimentConfig& config);
RunResult run_convergence(const ExperimentConfig& config);
RunResult run_counterexample_2a(const ExperimentConfig& config);
RunResult run_counterexample_2b(const ExperimentConfig& config);
RunResult run_kernel_scan(const ExperimentConfig& config);
RunResult run_maximal_bound(const ExperimentConfig& config);

// Stable sort by (experiment, keys).
void sort_records(std::vector<ExperimentRecord>& records);

// "# schema=1, config=<hash>" then a header row
// experiment,<keys...>,<statistics...>,config and one row per record;
// reals printed with 17 significant digits.
std::string to_csv(const std::vector<ExperimentRecord>& records, const std::string& config_hash);
nlohmann::ordered_json to_json_table(const std::vector<ExperimentRecord>& records, const std::string& config_hash);

// ---- test-function families ----------------------------------------------

// "character-polynomial": random coefficients below M_band (band default 2).
// "smoothed-indicator":   sigma_{M_L} of the indicator of the first
//                         floor(theta M_N) cells (theta default 1/3,
//                         L = N - smoothing, smoothing default 4).
// "construction-2a-fast": coefficient 1/M_i on [M_i, M_{i+1}), i < N.
// "constant":             f = 1.
Spectrum convergence_family(const std::string& name, const Structure& vs, const nlohmann::json& parameters,
                            XorShift64Star& rng);

struct Sample {
    std::string kind;  // "canonical-atom", "random-atom", "random-spectrum", "construction-2a"
    Spectrum spectrum;
};

// Random p-atom: depth uniform in [0, N-1], base digits uniform, mean-zero
// uniform values rescaled to sup = mu(I)^{-1/p}.
StepFunction random_atom(const Structure& vs, double p, XorShift64Star& rng);

// Canonical atoms a_k (k < N), `samples` random atoms, `samples` random
// mean-zero band-limited spectra, and the 2a construction when p < 1/2.
std::vector<Sample> maximal_bound_family(const Structure& vs, double p, int samples, XorShift64Star& rng);

struct RatioSummary {
    double max_ratio = 0.0;
    Index argmax_n = 0;
    double hardy = 0.0;
};

// max_{1<=n<=n_max} ||sigma_n f||_p / (weight(n) ||f||_{H_p}); zero for f = 0.
RatioSummary fejer_ratio(const Spectrum& s, double p, Index n_max,
                         std::vector<ExperimentRecord>* detail = nullptr, Index sample = 0, Index p_index = 0);

// Log-spaced n grid in [1, n_max] including every M_k and M_k + 1.
std::vector<Index> convergence_grid(const Structure& vs, Index n_max);

}  // namespace vilenkin
