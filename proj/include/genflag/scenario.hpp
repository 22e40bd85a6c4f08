#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genflag/isotropic.hpp"
#include "genflag/operator.hpp"

namespace genflag {

/// A bundled schema with a golden membership predicate: the matrix-shape
/// description of the automorphism group written out by hand against the raw
/// absorbed matrix, independent of the cut-splitting machinery.
struct Scenario {
    std::string name;
    std::string summary;
    FlagSchema schema;
    IndexInterval default_window;
    std::optional<FormKind> natural_form;
    std::function<bool(const StructuredOperator&)> golden_member;
};

const Scenario& get_scenario(const std::string& name);
std::vector<std::string> scenario_names();

} // namespace genflag
