#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olp/geometry.hpp"

namespace olp {

enum class LengthUnit { millimeter, centimeter, meter };
enum class PathKind { line, arc, spline };
enum class DefaultMotion { joint, linear };

/// Rotation rows plus translation exactly as read from the file: twelve
/// numbers, not yet checked for orthonormality. validate_scene() vets the
/// rotation block before any math touches it.
struct RawTransform {
  Mat3 rotation;
  Vec3 translation;

  bool operator==(const RawTransform&) const = default;
};

struct FrameDef {
  std::string id;
  bool base = false;
  RawTransform transform;

  bool operator==(const FrameDef&) const = default;
};

struct ToolModel {
  std::string name;
  RawTransform transform;
  std::optional<Vec3> workpoint;

  /// The attached work point, falling back to the transform origin.
  Vec3 workpoint_or_origin() const {
    return workpoint ? *workpoint : transform.translation;
  }

  bool operator==(const ToolModel&) const = default;
};

struct PathEntity {
  std::string id;
  PathKind kind = PathKind::line;
  std::vector<Vec3> points;
  std::optional<std::string> orientation_tool;
  bool risk = false;
  std::optional<int> risk_samples;

  bool operator==(const PathEntity&) const = default;
};

struct ProcessParams {
  double speed_percent = 100.0;
  int cycles = 1;
  std::optional<RawTransform> home;  // pose in the base frame
  double approach_distance = 0.0;    // mm
  double sample_width_dt = 0.1;      // seconds
  DefaultMotion default_motion = DefaultMotion::joint;
  int output_channel = 1;

  bool operator==(const ProcessParams&) const = default;
};

/// Parsed robot-cell description. All lengths are canonical millimetres
/// after parsing, regardless of the unit the file declared.
struct SceneDocument {
  LengthUnit units = LengthUnit::millimeter;
  std::vector<FrameDef> frames;
  std::vector<ToolModel> tools;
  std::vector<PathEntity> paths;
  ProcessParams params;

  /// The unique frame marked base, or nullptr when there is none or more
  /// than one.
  const FrameDef* base_frame() const {
    const FrameDef* found = nullptr;
    for (const auto& f : frames) {
      if (!f.base) continue;
      if (found) return nullptr;
      found = &f;
    }
    return found;
  }

  bool operator==(const SceneDocument&) const = default;
};

/// A structural problem found by validate_scene. Violations are data, not
/// failures; they are reported sorted by entity id then code.
struct Violation {
  std::string entity;
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

const char* to_string(LengthUnit u);
const char* to_string(PathKind k);
const char* to_string(DefaultMotion m);

}  // namespace olp
