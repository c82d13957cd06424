#pragma once

// JSON forms shared by the CLI and fixtures.
//
//   structure:  {"m": [m_0, ..., m_{N-1}], "N": N}
//               (input also accepts {"pattern": [...], "repeat_to": N})
//   function:   {"structure": ..., "kind": "values" | "coeffs",
//                "data": [[re, im], ...]}   (length M_N)

#include <json.hpp>

#include "vilenkin/norms.hpp"
#include "vilenkin/record.hpp"

namespace vilenkin {

nlohmann::json structure_to_json(const Structure& vs);
// `resolution` < 0 means take it from the object ("N" / "repeat_to", or
// the length of "m").
Structure structure_from_json(const nlohmann::json& j, int resolution = -1);

nlohmann::json to_json(const StepFunction& f);
nlohmann::json to_json(const Spectrum& s);
StepFunction step_function_from_json(const nlohmann::json& j);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NormReport& r);

}  // namespace vilenkin
