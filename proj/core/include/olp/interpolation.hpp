#pragma once

#include <vector>

#include "olp/extraction.hpp"
#include "olp/rotation.hpp"

namespace olp {

/// Densification parameters for one risk segment: n equally spaced points
/// sampled every dt seconds. The per-axis velocity is derived from the
/// segment endpoints so that the last sample lands exactly on the end
/// point.
struct InterpolationSpec {
  int n = 2;
  double dt = 1.0;
};

/// (p_end - p_start) / ((n - 1) * dt).
Vec3 segment_velocity(const Point3& p_start, const Point3& p_end,
                      const InterpolationSpec& spec);

/// Points r(k) = p_start + v * k * dt for k = 0..n-1. The first point is
/// p_start and the last is p_end; identical endpoints yield n copies.
std::vector<Point3> interpolate_positions(const Point3& p_start, const Point3& p_end,
                                          const InterpolationSpec& spec);

/// Spherical linear interpolation along the shorter great-circle arc.
/// Falls back to normalized linear interpolation when the arc is below
/// 1e-7 rad. Throws InterpolationError when the relative rotation is a
/// half turn, which leaves the rotation axis ambiguous; add an
/// intermediate waypoint (tool model) between the two poses instead.
UnitQuaternion slerp(const UnitQuaternion& q0, const UnitQuaternion& qn, double t);

/// Replaces the linear segment a -> b with n poses: positions from
/// interpolate_positions, orientations slerped with t = k/(n-1). The first
/// target equals a and the last equals b; op flags stay on the endpoints.
std::vector<MotionTarget> interpolate_segment(const MotionTarget& a,
                                              const MotionTarget& b,
                                              const InterpolationSpec& spec);

}  // namespace olp
