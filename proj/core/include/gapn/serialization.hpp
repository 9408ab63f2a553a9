#pragma once

#include <optional>
#include <string>

#include "gapn/diff_analysis.hpp"
#include "gapn/dual_arcs.hpp"
#include "gapn/function.hpp"
#include "gapn/walsh.hpp"

namespace gapn {

// {"field": "<spec>", "poly": [[d, c], ...]}
std::string function_to_json(const Polynomial& poly);
// {"field": "<spec>", "lut": [v_0, ...]}
std::string function_to_json(const FunctionTable& table);

struct LoadedFunction {
    FieldPtr field;
    std::optional<Polynomial> poly; // present when the source was sparse
    FunctionTable table;
};

// Accepts both the "poly" and the "lut" shape.
LoadedFunction function_from_json(const std::string& text);

std::string spectrum_to_json(const SpectrumReport& report,
                             const std::string& function_json,
                             bool include_rows = true);

std::string walsh_to_json(const WalshReport& report, const std::string& function_json);

std::string arc_to_json(const ArcReport& report, const std::vector<SubspaceBasis>& arc);

} // namespace gapn
