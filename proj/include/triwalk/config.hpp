#pragma once

#include "triwalk/walk_model.hpp"

#include <optional>
#include <string>

namespace triwalk {

/// Run configuration parsed from a JSON file: six probabilities as "p/q"
/// strings, optional realization override, exact|float mode, output dir.
struct WalkConfig {
    StepDistribution walk;
    std::optional<Realization> realization;  // defaults to the standard basis
    bool exact_mode = true;
    std::string out_dir = ".";

    static WalkConfig load(const std::string& path);
};

}  // namespace triwalk
