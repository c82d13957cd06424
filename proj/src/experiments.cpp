#include "vilenkin/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vilenkin/characters.hpp"
#include "vilenkin/counterexamples.hpp"
#include "vilenkin/errors.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/norms.hpp"
#include "vilenkin/serialize.hpp"

namespace vilenkin {
namespace {

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {"gram",          "kernels",           "convergence",
                                                   "counterexample-2a", "counterexample-2b", "kernel-scan",
                                                   "maximal-bound"};
    return names;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double lp_of(const Eigen::VectorXcd& v, double p) {
    return std::pow(v.cwiseAbs().array().pow(p).mean(), 1.0 / p);
}

void fail(RunResult& r, std::string message) {
    r.exit = std::max(r.exit, ExitCode::check_failed);
    r.messages.push_back(std::move(message));
}

int param_int(const ExperimentConfig& c, const char* name, int fallback) {
    return c.parameters.value(name, fallback);
}

void dump_spectrum(const ExperimentConfig& c, const Spectrum& s) {
    if (!c.parameters.contains("dump")) return;
    std::ofstream out(c.parameters.at("dump").get<std::string>());
    if (!out) throw std::runtime_error("cannot write spectrum dump");
    out << to_json(s).dump() << '\n';
}

}  // namespace

// ---- config ----------------------------------------------------------------

std::string ExperimentConfig::hash() const {
    const std::string text = canonical.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentConfig parse_config(const nlohmann::json& j, std::optional<std::uint64_t> seed_override,
                              std::optional<Index> cell_cap) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    if (!j.contains("structure")) throw ValidationError("config needs a \"structure\"");
    const int resolution = j.value("resolution", -1);

    ExperimentConfig c(structure_from_json(j.at("structure"), resolution));
    c.experiment = j.value("experiment", std::string{});
    if (std::find(known_experiments().begin(), known_experiments().end(), c.experiment) == known_experiments().end())
        throw ValidationError("unknown experiment \"" + c.experiment + "\"");

    c.p_values = j.value("p_values", std::vector<double>{0.25, 0.5});
    for (double p : c.p_values)
        if (!(p > 0.0 && p <= 1.0)) throw ValidationError("p_values must lie in (0, 1]");

    if (j.contains("parameters")) {
        if (!j.at("parameters").is_object()) throw ValidationError("\"parameters\" must be an object");
        c.parameters = j.at("parameters");
    }
    if (j.contains("output")) {
        const auto& o = j.at("output");
        c.output.path = o.value("path", std::string{});
        c.output.format = o.value("format", std::string{"csv"});
    }
    if (c.output.format != "csv" && c.output.format != "json")
        throw ValidationError("output format must be csv or json");

    c.seed = seed_override ? *seed_override : j.value("seed", std::uint64_t{1});
    if (cell_cap) c.cell_cap = *cell_cap;

    c.canonical = j;
    c.canonical.erase("output");
    c.canonical["seed"] = c.seed;
    return c;
}

// ---- records ---------------------------------------------------------------

void sort_records(std::vector<ExperimentRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
        if (a.experiment != b.experiment) return a.experiment < b.experiment;
        const std::size_t n = std::min(a.keys.size(), b.keys.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.keys[i].second != b.keys[i].second) return a.keys[i].second < b.keys[i].second;
        return a.keys.size() < b.keys.size();
    });
}

std::string to_csv(const std::vector<ExperimentRecord>& records, const std::string& config_hash) {
    std::vector<std::string> key_cols, value_cols;
    auto note = [](std::vector<std::string>& cols, const std::string& name) {
        if (std::find(cols.begin(), cols.end(), name) == cols.end()) cols.push_back(name);
    };
    for (const auto& r : records) {
        for (const auto& [k, v] : r.keys) note(key_cols, k);
        for (const auto& [k, v] : r.values) note(value_cols, k);
    }

    std::ostringstream out;
    out << "# schema=" << kSchemaVersion << ", config=" << config_hash << '\n';
    out << "experiment";
    for (const auto& k : key_cols) out << ',' << k;
    for (const auto& k : value_cols) out << ',' << k;
    out << ",config\n";
    for (const auto& r : records) {
        out << r.experiment;
        for (const auto& col : key_cols) {
            out << ',';
            for (const auto& [k, v] : r.keys)
                if (k == col) out << v;
        }
        for (const auto& col : value_cols) {
            out << ',';
            for (const auto& [k, v] : r.values)
                if (k == col) out << format_real(v);
        }
        out << ',' << config_hash << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json_table(const std::vector<ExperimentRecord>& records, const std::string& config_hash) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json keys = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.keys) keys[k] = v;
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.values) values[k] = v;
        rows.push_back({{"experiment", r.experiment}, {"keys", keys}, {"values", values}, {"config", config_hash}});
    }
    return {{"schema", kSchemaVersion}, {"config", config_hash}, {"records", rows}};
}

// ---- families --------------------------------------------------------------

Spectrum convergence_family(const std::string& name, const Structure& vs, const nlohmann::json& parameters,
                            XorShift64Star& rng) {
    const int N = vs.resolution();
    Spectrum s(vs);
    if (name == "constant") {
        s[0] = 1.0;
    } else if (name == "character-polynomial") {
        const int band = std::clamp(parameters.value("band", 2), 0, N);
        for (Index j = 1; j < vs.block(band); ++j) s[j] = rng.unit_box();
    } else if (name == "smoothed-indicator") {
        const double theta = parameters.value("theta", 1.0 / 3.0);
        const int level = std::clamp(N - parameters.value("smoothing", 4), 0, N);
        StepFunction indicator(vs);
        const auto count = static_cast<Index>(std::floor(theta * static_cast<double>(vs.cells())));
        indicator.values().head(std::clamp<Index>(count, 0, vs.cells())).setOnes();
        s = fejer_spectrum(analyze(indicator), vs.block(level));
    } else if (name == "construction-2a-fast") {
        for (int i = 0; i < N; ++i)
            s.coeffs().segment(vs.block(i), vs.block(i + 1) - vs.block(i)).setConstant(1.0 / vs.block(i));
    } else {
        throw ValidationError("unknown test-function family \"" + name + "\"");
    }
    return s;
}

StepFunction random_atom(const Structure& vs, double p, XorShift64Star& rng) {
    const int N = vs.resolution();
    if (N < 1) throw ValidationError("random atoms need resolution >= 1");
    const int depth = static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
    GroupPoint base = zero_point(vs);
    for (int k = 0; k < depth; ++k)
        base.digits[static_cast<std::size_t>(k)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(vs.radix(k))));
    const CellRange range = cylinder_cells(base, depth, vs);
    StepFunction a(vs);
    auto seg = a.values().segment(range.first, range.count);
    for (Index i = 0; i < range.count; ++i) seg[i] = rng.uniform(-1.0, 1.0);
    seg.array() -= seg.mean();
    const double sup = seg.cwiseAbs().maxCoeff();
    if (sup > 0.0) seg *= std::pow(range.measure(vs), -1.0 / p) / sup;
    return a;
}

std::vector<Sample> maximal_bound_family(const Structure& vs, double p, int samples, XorShift64Star& rng) {
    std::vector<Sample> out;
    const int N = vs.resolution();
    for (int k = 0; k + 1 <= N; ++k) out.push_back({"canonical-atom", analyze(atom_2a(k, p, vs))});
    for (int i = 0; i < samples; ++i) out.push_back({"random-atom", analyze(random_atom(vs, p, rng))});
    for (int i = 0; i < samples; ++i) {
        const int band = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
        Spectrum s(vs);
        for (Index j = 1; j < vs.block(band); ++j) s[j] = rng.unit_box();
        out.push_back({"random-spectrum", std::move(s)});
    }
    if (p < 0.5 && N >= 1) out.push_back({"construction-2a", build_2a(p, N - 1, vs).spectrum});
    return out;
}

RatioSummary fejer_ratio(const Spectrum& s, double p, Index n_max, std::vector<ExperimentRecord>* detail,
                         Index sample, Index p_index) {
    RatioSummary out;
    out.hardy = hardy_norm(s, p);
    if (out.hardy == 0.0) return out;
    const MaximalWeight weight(p);
    for_each_fejer_mean(s, n_max, [&](Index n, const Eigen::VectorXcd& sigma) {
        const double norm = lp_of(sigma, p);
        const double ratio = norm / (weight(n) * out.hardy);
        if (ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.argmax_n = n;
        }
        if (detail)
            detail->push_back(ExperimentRecord{"maximal-bound-detail",
                                               {{"p_index", p_index}, {"sample", sample}, {"n", n}},
                                               {{"p", p}, {"lp", norm}, {"weight", weight(n)}, {"ratio", ratio}}});
    });
    return out;
}

std::vector<Index> convergence_grid(const Structure& vs, Index n_max) {
    std::set<Index> grid;
    for (double v = 1.0; v <= static_cast<double>(n_max); v *= 1.5) grid.insert(static_cast<Index>(std::floor(v)));
    for (int k = 0; k <= vs.resolution(); ++k) {
        if (vs.block(k) <= n_max) grid.insert(vs.block(k));
        if (vs.block(k) + 1 <= n_max) grid.insert(vs.block(k) + 1);
    }
    grid.insert(n_max);
    return {grid.begin(), grid.end()};
}

// ---- runners ---------------------------------------------------------------

RunResult run_gram(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    const Index M = vs.cells();
    if (M > 4096) throw CapacityError("gram experiment materializes an M_N x M_N matrix; M_N must be <= 4096",
                                      vs.resolution());
    RunResult r;
    Eigen::MatrixXcd psi(M, M);
    for (Index n = 0; n < M; ++n) psi.col(n) = character_values(n, vs);
    const Eigen::MatrixXcd gram = (psi.adjoint() * psi) / static_cast<double>(M);
    const Eigen::MatrixXcd diff = gram - Eigen::MatrixXcd::Identity(M, M);
    const double gram_error = diff.cwiseAbs().maxCoeff();
    double offdiag = 0.0;
    for (Index i = 0; i < M; ++i)
        for (Index j = 0; j < M; ++j)
            if (i != j) offdiag = std::max(offdiag, std::abs(gram(i, j)));

    XorShift64Star rng(c.seed);
    const int samples = param_int(c, "samples", 100);
    double parseval = 0.0;
    for (int s = 0; s < samples; ++s) {
        StepFunction f(vs);
        for (Index i = 0; i < M; ++i) f[i] = rng.unit_box();
        const double energy = f.values().squaredNorm() / static_cast<double>(M);
        const double coeff_energy = analyze(f).coeffs().squaredNorm();
        parseval = std::max(parseval, std::abs(energy - coeff_energy) / energy);
    }
    r.records.push_back(ExperimentRecord{"gram",
                                         {{"M", M}},
                                         {{"max_gram_error", gram_error},
                                          {"max_offdiag", offdiag},
                                          {"parseval_max_rel_error", parseval},
                                          {"samples", static_cast<double>(samples)}}});
    if (gram_error >= 1e-12) fail(r, "Gram matrix deviates from identity by " + format_real(gram_error));
    if (parseval >= 1e-10) fail(r, "Parseval relative error " + format_real(parseval));
    return r;
}

RunResult run_kernels(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    for (int j = 0; j <= vs.resolution(); ++j) {
        const StepFunction d = dirichlet_kernel(vs.block(j), vs);
        const CellRange ij = cylinder_cells(zero_point(vs), j, vs);
        double err = 0.0;
        for (Index cell = 0; cell < vs.cells(); ++cell) {
            const double expected = ij.contains(cell) ? static_cast<double>(vs.block(j)) : 0.0;
            err = std::max(err, std::abs(d[cell] - expected));
        }
        r.records.push_back(ExperimentRecord{"dirichlet-closed-form", {{"j", j}}, {{"error", err}}});
        if (err >= 1e-12) fail(r, "D_{M_" + std::to_string(j) + "} deviates from its closed form");
    }

    std::vector<int> levels;
    if (c.parameters.contains("A")) {
        const auto& a = c.parameters.at("A");
        levels = a.is_array() ? a.get<std::vector<int>>() : std::vector<int>{a.get<int>()};
    } else {
        for (int A = 3; 2 * A - 1 <= vs.resolution(); ++A) levels.push_back(A);
    }
    for (int A : levels) {
        if (A >= 3 && 2 * A - 1 > vs.resolution())
            throw CapacityError("kernel bound check for A = " + std::to_string(A) + " needs resolution " +
                                    std::to_string(2 * A - 1),
                                2 * A - 1);
        const KernelBoundReport rep = check_kernel_bound(A, vs);
        r.records.push_back(ExperimentRecord{"fejer-lower-bound",
                                             {{"A", A}},
                                             {{"q", static_cast<double>(rep.kernel_index)},
                                              {"entries", static_cast<double>(rep.entries)},
                                              {"cells_checked", static_cast<double>(rep.cells_checked)},
                                              {"violations", static_cast<double>(rep.violations)},
                                              {"min_margin", rep.entries ? rep.min_margin : 0.0}}});
        if (rep.violations > 0) fail(r, "Fejer kernel lower bound violated for A = " + std::to_string(A));
    }
    return r;
}

RunResult run_convergence(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    XorShift64Star rng(c.seed);
    const std::string family = c.parameters.value("family", std::string{"character-polynomial"});
    const Spectrum s = convergence_family(family, vs, c.parameters, rng);
    const StepFunction f = synthesize(s);
    const Index n_max = c.parameters.value("n_max", vs.cells());
    const auto grid = convergence_grid(vs, std::min(n_max, vs.cells()));

    for (std::size_t pi = 0; pi < c.p_values.size(); ++pi) {
        const double p = c.p_values[pi];
        const auto p_index = static_cast<Index>(pi);
        const double norm = lp_quasinorm(f, p);
        const double exponent = 1.0 / p - 2.0;
        const int log_power = 2 * static_cast<int>(std::floor(0.5 + p));
        std::vector<double> omega(static_cast<std::size_t>(vs.resolution()) + 1);
        for (int k = 0; k <= vs.resolution(); ++k)
            omega[static_cast<std::size_t>(k)] = modulus_of_continuity(s, k, p);

        for (Index n : grid) {
            const int level = n == vs.cells() ? vs.resolution() : leading_position(n, vs);
            const double err = lp_quasinorm(fejer_mean(s, n) - f, p);
            const double w = omega[static_cast<std::size_t>(level)];
            const double bound_term = w * std::pow(static_cast<double>(vs.block(level)), exponent) *
                                      std::pow(static_cast<double>(level), log_power);
            r.records.push_back(ExperimentRecord{"convergence",
                                                 {{"p_index", p_index}, {"n", n}},
                                                 {{"p", p},
                                                  {"error", err},
                                                  {"relative_error", norm > 0 ? err / norm : 0.0},
                                                  {"level", static_cast<double>(level)},
                                                  {"omega", w},
                                                  {"bound_term", bound_term}}});
        }
        for (int k = 0; k <= vs.resolution(); ++k) {
            const double err = lp_quasinorm(fejer_mean(s, vs.block(k)) - f, p);
            r.records.push_back(ExperimentRecord{"convergence-dyadic",
                                                 {{"p_index", p_index}, {"k", k}},
                                                 {{"p", p}, {"error", err}, {"relative_error", norm > 0 ? err / norm : 0.0}}});
        }
    }
    return r;
}

RunResult run_counterexample_2a(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    const int A = param_int(c, "A", vs.resolution() - 1);
    for (std::size_t pi = 0; pi < c.p_values.size(); ++pi) {
        const double p = c.p_values[pi];
        if (p >= 0.5) {
            r.messages.push_back("counterexample-2a skips p = " + format_real(p) + " (needs p < 1/2)");
            continue;
        }
        const auto p_index = static_cast<Index>(pi);
        const Construction2a con = build_2a(p, A, vs);
        if (pi == 0) dump_spectrum(c, con.spectrum);

        double law_error = 0.0;
        for (Index j = 0; j < vs.cells(); ++j) {
            double expected = 0.0;
            if (j >= 1 && j < vs.block(A + 1)) expected = static_cast<double>(vs.block(leading_position(j, vs)));
            law_error = std::max(law_error, std::abs(con.spectrum[j] - expected));
        }
        std::size_t invalid = 0;
        for (std::size_t i = 0; i < con.decomposition.atoms.size(); ++i)
            if (!validate_atom(con.decomposition.atoms[i], p, con.decomposition.intervals[i]).valid()) ++invalid;
        r.records.push_back(ExperimentRecord{"construction-2a",
                                             {{"p_index", p_index}},
                                             {{"p", p},
                                              {"A", static_cast<double>(A)},
                                              {"coefficient_law_error", law_error},
                                              {"invalid_atoms", static_cast<double>(invalid)}}});
        if (law_error >= 1e-12) fail(r, "2a spectrum deviates from the closed-form coefficient law");
        if (invalid) fail(r, "2a construction has atoms failing the p-atom certificate");

        const int n_first = param_int(c, "n_first", 1);
        const int n_last = std::min(param_int(c, "n_last", A + 1), vs.resolution());
        for (auto row : modulus_report_2a(con, n_first, n_last)) {
            row.keys.insert(row.keys.begin(), {"p_index", p_index});
            row.values.insert(row.values.begin(), {"p", p});
            r.records.push_back(std::move(row));
        }
        const int k_first = param_int(c, "k_first", 1);
        const int k_last = std::min(param_int(c, "k_last", A - 1), A - 1);
        for (int k = k_first; k <= k_last; ++k) {
            const Divergence2a d = divergence_2a(con, k);
            r.records.push_back(ExperimentRecord{"divergence-2a",
                                                 {{"p_index", p_index}, {"k", k}},
                                                 {{"p", p},
                                                  {"weak_root", d.value},
                                                  {"weak_powered", d.powered},
                                                  {"dominant", d.dominant},
                                                  {"head", d.head},
                                                  {"tail", d.tail},
                                                  {"lp_fejer_dyadic", d.lp_fejer_dyadic}}});
        }
    }
    return r;
}

RunResult run_counterexample_2b(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    const int A = param_int(c, "A", 3);
    const Construction2b con = build_2b(A, vs);
    dump_spectrum(c, con.spectrum);

    double law_error = 0.0;
    for (Index j = 0; j < vs.cells(); ++j) {
        double expected = 0.0;
        for (int i = 1; i <= A; ++i) {
            const int level = static_cast<int>(2 * vs.block(i));
            if (j >= vs.block(level) && j < vs.block(level + 1)) {
                const double Mi = static_cast<double>(vs.block(i));
                expected = static_cast<double>(vs.block(level)) / (Mi * Mi);
            }
        }
        law_error = std::max(law_error, std::abs(con.spectrum[j] - expected));
    }
    std::size_t invalid = 0;
    for (std::size_t i = 0; i < con.decomposition.atoms.size(); ++i)
        if (!validate_atom(con.decomposition.atoms[i], 0.5, con.decomposition.intervals[i]).valid()) ++invalid;
    r.records.push_back(ExperimentRecord{"construction-2b",
                                         {{"A", A}},
                                         {{"coefficient_law_error", law_error},
                                          {"invalid_atoms", static_cast<double>(invalid)}}});
    if (law_error >= 1e-12) fail(r, "2b spectrum deviates from the closed-form coefficient law");
    if (invalid) fail(r, "2b construction has atoms failing the p-atom certificate");

    const int n_first = param_int(c, "n_first", 1);
    const int n_last = std::min(param_int(c, "n_last", vs.resolution()), vs.resolution());
    for (auto& row : modulus_report_2b(con, n_first, n_last)) r.records.push_back(std::move(row));

    for (int k = 1; k <= A; ++k) {
        if (2 * vs.block(k) + 1 > vs.resolution()) {
            r.messages.push_back("divergence-2b: q_{M_" + std::to_string(k) + "} exceeds M_N, skipped");
            continue;
        }
        const Divergence2b d = divergence_2b(con, k);
        r.records.push_back(ExperimentRecord{"divergence-2b",
                                             {{"k", k}},
                                             {{"q", static_cast<double>(d.q)},
                                              {"value", d.value},
                                              {"kernel_term", d.kernel_term},
                                              {"head_term", d.head_term},
                                              {"tail_term", d.tail_term},
                                              {"lower_bound", d.lower_bound()}}});
    }
    return r;
}

RunResult run_kernel_scan(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    const int A_first = param_int(c, "A_first", 1);
    const int A_last = param_int(c, "A_last", (vs.resolution() - 1) / 2);
    if (2 * A_last + 1 > vs.resolution())
        throw CapacityError("kernel scan up to A = " + std::to_string(A_last) + " needs resolution " +
                                std::to_string(2 * A_last + 1),
                            2 * A_last + 1);
    r.records = kernel_halfnorm_scan(A_first, A_last, vs);
    return r;
}

RunResult run_maximal_bound(const ExperimentConfig& c) {
    const Structure& vs = c.structure;
    RunResult r;
    XorShift64Star rng(c.seed);
    const int samples = param_int(c, "samples", 4);
    const Index n_max = std::min<Index>(c.parameters.value("n_max", vs.cells()), vs.cells());
    const bool detail = c.parameters.value("detail", false);

    for (std::size_t pi = 0; pi < c.p_values.size(); ++pi) {
        const double p = c.p_values[pi];
        if (p > 0.5) {
            r.messages.push_back("maximal-bound skips p = " + format_real(p) + " (needs p <= 1/2)");
            continue;
        }
        const auto p_index = static_cast<Index>(pi);
        const auto family = maximal_bound_family(vs, p, samples, rng);
        double family_max = 0.0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            const auto sample = static_cast<Index>(i);
            const RatioSummary sum = fejer_ratio(family[i].spectrum, p, n_max, detail ? &r.records : nullptr, sample, p_index);
            family_max = std::max(family_max, sum.max_ratio);
            const double kind = family[i].kind == "canonical-atom"    ? 0.0
                                : family[i].kind == "random-atom"     ? 1.0
                                : family[i].kind == "random-spectrum" ? 2.0
                                                                      : 3.0;
            r.records.push_back(ExperimentRecord{"maximal-bound",
                                                 {{"p_index", p_index}, {"sample", sample}},
                                                 {{"p", p},
                                                  {"kind", kind},
                                                  {"hardy", sum.hardy},
                                                  {"max_ratio", sum.max_ratio},
                                                  {"argmax_n", static_cast<double>(sum.argmax_n)}}});
        }
        r.records.push_back(ExperimentRecord{
            "maximal-bound-summary", {{"p_index", p_index}}, {{"p", p}, {"family_max_ratio", family_max}}});
        if (!std::isfinite(family_max)) fail(r, "maximal-bound ratio is not finite");
    }
    return r;
}

RunResult run_experiment(const ExperimentConfig& c) {
    RunResult r;
    try {
        if (c.structure.cells() > c.cell_cap)
            throw CapacityError("M_N = " + std::to_string(c.structure.cells()) + " exceeds the cell cap " +
                                    std::to_string(c.cell_cap),
                                c.resolution());
        if (c.experiment == "gram") r = run_gram(c);
        else if (c.experiment == "kernels") r = run_kernels(c);
        else if (c.experiment == "convergence") r = run_convergence(c);
        else if (c.experiment == "counterexample-2a") r = run_counterexample_2a(c);
        else if (c.experiment == "counterexample-2b") r = run_counterexample_2b(c);
        else if (c.experiment == "kernel-scan") r = run_kernel_scan(c);
        else if (c.experiment == "maximal-bound") r = run_maximal_bound(c);
        else throw ValidationError("unknown experiment \"" + c.experiment + "\"");
    } catch (const CapacityError& e) {
        r.records.clear();
        r.exit = ExitCode::capacity;
        r.messages.emplace_back(e.what());
        return r;
    }
    sort_records(r.records);
    return r;
}

}  // namespace vilenkin
