#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olp/scene.hpp"

namespace olp {

/// Parses the scene file format. Lengths are converted to millimetres at
/// this boundary (one multiplication per value). Throws ParseError with the
/// offending line number on syntax errors, unknown units, wrong point
/// counts, duplicate tool names, or out-of-range parameter values.
SceneDocument parse_scene(std::string_view text);

/// Canonical writer: fixed key order, 15 significant digits, byte-stable.
/// parse_scene(emit_scene(doc)) == doc for any valid document.
std::string emit_scene(const SceneDocument& doc);

/// Structural checks on a parsed document: step_ naming of motion tools,
/// unique sequence numbers, orthonormal rotation blocks (1e-6), exactly one
/// base frame, and resolvable orientation_tool references. Pure; the result
/// is sorted by entity id then code.
std::vector<Violation> validate_scene(const SceneDocument& doc);

}  // namespace olp
