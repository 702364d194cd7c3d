#pragma once

#include "hodge/bigraded.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

/// A named variety with an involution-split Hodge diamond. For a surface
/// without a chosen involution every class sits in the +1 part.
struct SurfaceSpec {
    std::string name;
    EquivHodgeTable hodge;

    HodgeTable diamond() const { return hodge.forget_split(); }
};

namespace presets {

/// K3 surface split by the Enriques involution.
SurfaceSpec k3_enriques();
/// Enriques surface: 1, 10, 1 in even degrees, all classes +1.
SurfaceSpec enriques();

HodgeTable k3();
HodgeTable enriques_diamond();

std::vector<std::string> names();
/// Throws ParseError for an unknown name.
SurfaceSpec by_name(std::string_view name);

}  // namespace presets

/// Parses {"name": str, "dimension": int, "hodge": [[p, q, d_plus, d_minus], ...]}.
/// Throws ParseError on malformed input and OddCohomologyUnsupported when an
/// odd-degree entry is nonzero.
SurfaceSpec parse_surface_spec(std::string_view json_text);
SurfaceSpec load_surface_spec(const std::filesystem::path& path);

}  // namespace hodge
