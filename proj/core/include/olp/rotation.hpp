#pragma once

#include "olp/geometry.hpp"

namespace olp {

/// X-Y-Z Euler angles in radians: the rotation Rot_x(alpha) * Rot_y(beta)
/// * Rot_z(gamma). Angles are kept in (-pi, pi]. When the middle angle sits
/// at +-pi/2 the x and z axes align, alpha and gamma are no longer separable
/// (gimbal lock) and the convention alpha = 0 is applied.
struct OrientationTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool gimbal_locked = false;

  bool operator==(const OrientationTriple&) const = default;
};

/// Unit quaternion in canonical sign form: w >= 0, and when w == 0 the
/// first nonzero of x, y, z is positive. Construct through unit().
struct UnitQuaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const UnitQuaternion&) const = default;

  /// Normalizes and canonicalizes the sign. Throws Error on a zero norm.
  static UnitQuaternion unit(double w, double x, double y, double z);

  double dot(const UnitQuaternion& o) const {
    return w * o.w + x * o.x + y * o.y + z * o.z;
  }
};

/// Angle of the relative rotation between two unit quaternions, in radians.
/// Resolves angles well below 1e-9 (uses chordal distance, not acos).
double rotation_angle_between(const UnitQuaternion& a, const UnitQuaternion& b);

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

Mat3 euler_to_rot(const OrientationTriple& e);

/// Euler extraction with explicit branches for the gimbal-locked poles.
/// The lock branch triggers when sqrt(r11^2 + r12^2) < 1e-8; there beta is
/// snapped to +-pi/2, alpha set to 0 and gamma carries the combined spin.
/// Throws Error when r is not orthonormal within 1e-9.
OrientationTriple rot_to_euler(const Mat3& r);

/// Largest-diagonal-pivot extraction; stable near pi rotations.
UnitQuaternion rot_to_quat(const Mat3& r);

Mat3 quat_to_rot(const UnitQuaternion& q);

}  // namespace olp
