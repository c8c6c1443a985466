#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olp/scene.hpp"
#include "olp/transform.hpp"

namespace olp {

/// Parsed `step_<digits>[letter]` tool name.
struct StepName {
  int sequence = 0;
  std::optional<char> op_suffix;

  bool operator==(const StepName&) const = default;
};

/// Returns nullopt for names that do not start with `step_` (non-motion
/// tools, skipped). Throws ExtractionError for a `step_` name whose
/// sequence is not a positive number or whose suffix is not one uppercase
/// letter.
std::optional<StepName> parse_step_name(const std::string& name);

enum class MotionKind { joint, linear, circular, spline };
enum class OpAction { none, set_output_on, set_output_off, wait_timer };

/// One ordered robot instruction request, already expressed in the base
/// frame.
struct MotionTarget {
  Transform pose_in_base;
  MotionKind motion = MotionKind::joint;
  double speed_percent = 100.0;
  OpAction op = OpAction::none;
  std::vector<Transform> vias_in_base;  // circular: 1, spline: >= 1
  std::string source_id;

  bool operator==(const MotionTarget&) const = default;
};

struct ExtractionResult {
  std::vector<MotionTarget> targets;
  std::vector<Violation> warnings;
};

/// Walks the tool models in step order, remaps every pose into the base
/// frame and appends each path right after the step that orients it.
/// Expects a document that validate_scene() passed; throws ExtractionError
/// on a missing base frame or an orientation_tool that is skipped or
/// unknown. An empty result is returned as-is (the caller decides whether
/// an empty program is an error).
ExtractionResult extract_targets(const SceneDocument& doc);

/// Surrounds every target that carries an op with a linear approach and
/// departure target offset along the pose's local -z axis. distance 0 is a
/// no-op.
std::vector<MotionTarget> insert_approach_departure(std::vector<MotionTarget> targets,
                                                    double approach_distance);

const char* to_string(MotionKind k);
const char* to_string(OpAction a);

}  // namespace olp
