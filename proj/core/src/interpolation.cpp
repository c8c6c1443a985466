#include "olp/interpolation.hpp"

#include <cmath>

#include "olp/error.hpp"

namespace olp {
namespace {

constexpr double kSmallArc = 1e-7;
constexpr double kHalfTurnDot = 1e-10;

void require_valid(const InterpolationSpec& spec) {
  if (spec.n < 2) throw InterpolationError("interpolation needs at least 2 points");
  if (!(spec.dt > 0.0) || !std::isfinite(spec.dt))
    throw InterpolationError("sampling width dt must be positive");
}

void require_unit(const UnitQuaternion& q) {
  const double n = q.dot(q);
  if (!std::isfinite(n) || n < 1e-18)
    throw InterpolationError("quaternion norm is zero");
  if (std::abs(n - 1.0) > 1e-9)
    throw InterpolationError("quaternion is not unit length");
}

}  // namespace

Vec3 segment_velocity(const Point3& p_start, const Point3& p_end,
                      const InterpolationSpec& spec) {
  require_valid(spec);
  return (p_end - p_start) / ((spec.n - 1) * spec.dt);
}

std::vector<Point3> interpolate_positions(const Point3& p_start, const Point3& p_end,
                                          const InterpolationSpec& spec) {
  require_valid(spec);
  const Vec3 v = segment_velocity(p_start, p_end, spec);
  std::vector<Point3> points(static_cast<size_t>(spec.n));
  points.front() = p_start;
  for (int k = 1; k < spec.n - 1; ++k)
    points[static_cast<size_t>(k)] = p_start + v * (k * spec.dt);
  points.back() = p_end;
  return points;
}

UnitQuaternion slerp(const UnitQuaternion& q0, const UnitQuaternion& qn, double t) {
  require_unit(q0);
  require_unit(qn);
  if (!(t >= 0.0 && t <= 1.0))
    throw InterpolationError("slerp parameter must be in [0, 1]");

  double d = q0.dot(qn);
  double sign = 1.0;
  if (d < 0.0) {  // take the shorter arc
    d = -d;
    sign = -1.0;
  }
  if (d < kHalfTurnDot)
    throw InterpolationError(
        "relative rotation is a half turn, the interpolation axis is ambiguous; "
        "add an intermediate waypoint (tool model) between the two poses");

  // Endpoints are exact: both inputs are already canonical.
  if (t == 0.0) return q0;
  if (t == 1.0) return qn;

  double s0, s1;
  const double theta = std::acos(std::min(d, 1.0));
  if (theta < kSmallArc) {
    s0 = 1.0 - t;
    s1 = t;
  } else {
    const double sin_theta = std::sin(theta);
    s0 = std::sin((1.0 - t) * theta) / sin_theta;
    s1 = std::sin(t * theta) / sin_theta;
  }
  s1 *= sign;
  return UnitQuaternion::unit(s0 * q0.w + s1 * qn.w, s0 * q0.x + s1 * qn.x,
                              s0 * q0.y + s1 * qn.y, s0 * q0.z + s1 * qn.z);
}

std::vector<MotionTarget> interpolate_segment(const MotionTarget& a,
                                              const MotionTarget& b,
                                              const InterpolationSpec& spec) {
  require_valid(spec);
  if (a.motion != MotionKind::linear || b.motion != MotionKind::linear)
    throw InterpolationError("only linear segments can be densified");

  const std::vector<Point3> positions =
      interpolate_positions(a.pose_in_base.translation(), b.pose_in_base.translation(), spec);
  const UnitQuaternion qa = rot_to_quat(a.pose_in_base.rotation());
  const UnitQuaternion qb = rot_to_quat(b.pose_in_base.rotation());

  std::vector<MotionTarget> out(static_cast<size_t>(spec.n));
  out.front() = a;
  out.back() = b;
  for (int k = 1; k < spec.n - 1; ++k) {
    const double t = static_cast<double>(k) / (spec.n - 1);
    MotionTarget mid;
    mid.pose_in_base =
        Transform(quat_to_rot(slerp(qa, qb, t)), positions[static_cast<size_t>(k)]);
    mid.motion = MotionKind::linear;
    mid.speed_percent = b.speed_percent;
    mid.op = OpAction::none;
    mid.source_id = b.source_id;
    out[static_cast<size_t>(k)] = std::move(mid);
  }
  return out;
}

}  // namespace olp
