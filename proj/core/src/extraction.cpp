#include "olp/extraction.hpp"

#include <algorithm>
#include <cctype>

#include "olp/error.hpp"

namespace olp {

std::optional<StepName> parse_step_name(const std::string& name) {
  constexpr std::string_view prefix = "step_";
  if (name.size() < prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;

  const std::string rest = name.substr(prefix.size());
  size_t digits = 0;
  while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits])))
    ++digits;
  if (digits == 0)
    throw ExtractionError(name, "step name needs a sequence number after 'step_'");

  StepName step;
  long long seq = 0;
  for (size_t i = 0; i < digits; ++i) {
    seq = seq * 10 + (rest[i] - '0');
    if (seq > 1'000'000'000)
      throw ExtractionError(name, "sequence number is out of range");
  }
  if (seq < 1) throw ExtractionError(name, "sequence number must be positive");
  step.sequence = static_cast<int>(seq);

  if (digits < rest.size()) {
    if (rest.size() - digits != 1 || rest[digits] < 'A' || rest[digits] > 'Z')
      throw ExtractionError(name,
                            "operation suffix must be a single uppercase letter");
    step.op_suffix = rest[digits];
  }
  return step;
}

namespace {

struct MotionTool {
  const ToolModel* tool;
  StepName step;
};

OpAction op_from_suffix(const StepName& step, const std::string& tool_name,
                        std::vector<Violation>& warnings) {
  if (!step.op_suffix) return OpAction::none;
  switch (*step.op_suffix) {
    case 'A': return OpAction::set_output_on;
    case 'B': return OpAction::set_output_off;
    case 'T': return OpAction::wait_timer;
    default:
      warnings.push_back({tool_name, "unknown_op_suffix",
                          std::string("suffix '") + *step.op_suffix +
                              "' maps to no operation and is ignored"});
      return OpAction::none;
  }
}

}  // namespace

ExtractionResult extract_targets(const SceneDocument& doc) {
  const FrameDef* base_def = doc.base_frame();
  if (!base_def) throw ExtractionError("", "scene needs exactly one base frame");
  const Transform base = Transform::projected(base_def->transform.rotation,
                                              base_def->transform.translation);

  std::vector<MotionTool> motion_tools;
  for (const auto& tool : doc.tools) {
    if (auto step = parse_step_name(tool.name))
      motion_tools.push_back({&tool, *step});
  }
  std::stable_sort(motion_tools.begin(), motion_tools.end(),
                   [](const MotionTool& a, const MotionTool& b) {
                     return a.step.sequence < b.step.sequence;
                   });

  ExtractionResult result;
  for (const auto& mt : motion_tools) {
    const ToolModel& tool = *mt.tool;
    const Transform tool_in_u =
        Transform::projected(tool.transform.rotation, tool.transform.translation);
    const Mat3 rotation_in_base = remap_pose(base, tool_in_u).rotation();

    MotionTarget target;
    target.pose_in_base =
        Transform(rotation_in_base, remap_point(base, tool.workpoint_or_origin()));
    target.motion = doc.params.default_motion == DefaultMotion::joint
                        ? MotionKind::joint
                        : MotionKind::linear;
    target.speed_percent = doc.params.speed_percent;
    target.op = op_from_suffix(mt.step, tool.name, result.warnings);
    target.source_id = tool.name;
    result.targets.push_back(std::move(target));

    for (const auto& path : doc.paths) {
      if (!path.orientation_tool || *path.orientation_tool != tool.name) continue;
      MotionTarget pt;
      pt.speed_percent = doc.params.speed_percent;
      pt.source_id = path.id;
      switch (path.kind) {
        case PathKind::line:
          pt.motion = MotionKind::linear;
          pt.pose_in_base = Transform(rotation_in_base, remap_point(base, path.points[1]));
          break;
        case PathKind::arc:
          pt.motion = MotionKind::circular;
          pt.vias_in_base.emplace_back(rotation_in_base, remap_point(base, path.points[1]));
          pt.pose_in_base = Transform(rotation_in_base, remap_point(base, path.points[2]));
          break;
        case PathKind::spline:
          pt.motion = MotionKind::spline;
          for (size_t i = 1; i + 1 < path.points.size(); ++i)
            pt.vias_in_base.emplace_back(rotation_in_base, remap_point(base, path.points[i]));
          pt.pose_in_base =
              Transform(rotation_in_base, remap_point(base, path.points.back()));
          break;
      }
      result.targets.push_back(std::move(pt));
    }
  }

  // Any path that still points at a skipped or unknown tool is a real
  // mistake in the scene, not something to drop silently.
  for (const auto& path : doc.paths) {
    if (!path.orientation_tool)
      throw ExtractionError(path.id,
                            "path has no orientation_tool, so it cannot be sequenced");
    bool used = false;
    for (const auto& mt : motion_tools)
      if (mt.tool->name == *path.orientation_tool) used = true;
    if (!used)
      throw ExtractionError(path.id, "orientation_tool '" + *path.orientation_tool +
                                         "' is not a motion tool");
  }

  return result;
}

std::vector<MotionTarget> insert_approach_departure(std::vector<MotionTarget> targets,
                                                    double approach_distance) {
  if (!(approach_distance >= 0.0))
    throw ExtractionError("", "approach distance must be >= 0");
  if (approach_distance == 0.0) return targets;

  std::vector<MotionTarget> out;
  out.reserve(targets.size());
  for (auto& target : targets) {
    if (target.op == OpAction::none) {
      out.push_back(std::move(target));
      continue;
    }
    const Vec3 offset =
        target.pose_in_base.apply({0.0, 0.0, -approach_distance});
    MotionTarget side;
    side.pose_in_base = Transform(target.pose_in_base.rotation(), offset);
    side.motion = MotionKind::linear;
    side.speed_percent = target.speed_percent;
    side.op = OpAction::none;

    MotionTarget approach = side;
    approach.source_id = target.source_id + "~approach";
    MotionTarget depart = side;
    depart.source_id = target.source_id + "~depart";

    out.push_back(std::move(approach));
    out.push_back(std::move(target));
    out.push_back(std::move(depart));
  }
  return out;
}

const char* to_string(MotionKind k) {
  switch (k) {
    case MotionKind::joint: return "joint";
    case MotionKind::linear: return "linear";
    case MotionKind::circular: return "circular";
    case MotionKind::spline: return "spline";
  }
  return "joint";
}

const char* to_string(OpAction a) {
  switch (a) {
    case OpAction::none: return "none";
    case OpAction::set_output_on: return "set_output_on";
    case OpAction::set_output_off: return "set_output_off";
    case OpAction::wait_timer: return "wait_timer";
  }
  return "none";
}

}  // namespace olp
