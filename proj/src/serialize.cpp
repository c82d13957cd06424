#include "vilenkin/serialize.hpp"

#include <string>

#include "vilenkin/errors.hpp"

namespace vilenkin {
namespace {

nlohmann::json complex_array(const Eigen::VectorXcd& v) {
    nlohmann::json data = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) data.push_back({v[i].real(), v[i].imag()});
    return data;
}

Eigen::VectorXcd read_complex_array(const nlohmann::json& data, Index expected) {
    if (!data.is_array() || static_cast<Index>(data.size()) != expected)
        throw ValidationError("function data must be an array of " + std::to_string(expected) + " [re, im] pairs");
    Eigen::VectorXcd v(expected);
    for (Index i = 0; i < expected; ++i) {
        const auto& pair = data[static_cast<std::size_t>(i)];
        if (!pair.is_array() || pair.size() != 2) throw ValidationError("function entries must be [re, im] pairs");
        v[i] = {pair[0].get<double>(), pair[1].get<double>()};
    }
    return v;
}

void expect_kind(const nlohmann::json& j, const char* kind) {
    if (j.value("kind", std::string{}) != kind)
        throw ValidationError(std::string("expected a function object of kind \"") + kind + "\"");
}

}  // namespace

nlohmann::json structure_to_json(const Structure& vs) {
    return {{"m", vs.radices()}, {"N", vs.resolution()}};
}

Structure structure_from_json(const nlohmann::json& j, int resolution) {
    if (!j.is_object()) throw ValidationError("structure must be a JSON object");
    if (j.contains("pattern")) {
        const auto pattern = j.at("pattern").get<std::vector<int>>();
        const int n = resolution >= 0 ? resolution : j.value("repeat_to", j.value("N", -1));
        if (n < 0) throw ValidationError("pattern structure needs repeat_to or an explicit resolution");
        return Structure::repeating(pattern, n);
    }
    if (j.contains("m")) {
        const auto m = j.at("m").get<std::vector<int>>();
        const int n = resolution >= 0 ? resolution : j.value("N", static_cast<int>(m.size()));
        return Structure(m, n);
    }
    throw ValidationError("structure needs either \"m\" or \"pattern\"");
}

nlohmann::json to_json(const StepFunction& f) {
    return {{"structure", structure_to_json(f.structure())}, {"kind", "values"}, {"data", complex_array(f.values())}};
}

nlohmann::json to_json(const Spectrum& s) {
    return {{"structure", structure_to_json(s.structure())}, {"kind", "coeffs"}, {"data", complex_array(s.coeffs())}};
}

StepFunction step_function_from_json(const nlohmann::json& j) {
    expect_kind(j, "values");
    Structure vs = structure_from_json(j.at("structure"));
    auto values = read_complex_array(j.at("data"), vs.cells());
    return StepFunction(std::move(vs), std::move(values));
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
    expect_kind(j, "coeffs");
    Structure vs = structure_from_json(j.at("structure"));
    auto coeffs = read_complex_array(j.at("data"), vs.cells());
    return Spectrum(std::move(vs), std::move(coeffs));
}

nlohmann::json to_json(const NormReport& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : r.levels) levels.push_back({{"magnitude", l.magnitude}, {"measure", l.measure}});
    nlohmann::json out = {
        {"p", r.p},
        {"lp", r.lp},
        {"weak_lp", {{"powered", r.weak.powered}, {"root", r.weak.root}, {"magnitude", r.weak.magnitude}}},
        {"levels", std::move(levels)},
    };
    if (r.hardy) out["hardy"] = *r.hardy;
    return out;
}

}  // namespace vilenkin
