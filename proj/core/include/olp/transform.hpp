#pragma once

#include "olp/geometry.hpp"

namespace olp {

/// Rigid transform: 3x3 rotation plus translation in millimetres.
/// The rotation is orthonormal with determinant +1 within 1e-9,
/// enforced at construction.
class Transform {
public:
  Transform() = default;

  /// Throws Error if the rotation drifts from orthonormality beyond 1e-9.
  Transform(const Mat3& rotation, const Vec3& translation);

  static Transform identity() { return {}; }

  /// Accepts a rotation block with rounding noise (as read from a scene
  /// file) and projects it onto the nearest true rotation first.
  static Transform projected(const Mat3& rotation, const Vec3& translation);

  const Mat3& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }

  /// R*p + t.
  Vec3 apply(const Vec3& p) const {
    return rotation_ * p + translation_;
  }

  bool operator==(const Transform&) const = default;

private:
  Mat3 rotation_;
  Vec3 translation_;
};

/// Homogeneous product a*b. The result rotation is re-projected only when
/// its orthonormality drift exceeds 1e-12.
Transform compose(const Transform& a, const Transform& b);

/// Rigid inverse: rotation transposed, translation -Rt*p. Never goes
/// through a general matrix inversion.
Transform invert(const Transform& t);

/// Expresses a pose given in the scene frame {U} in the base frame {B}:
/// invert(base_in_u) composed with target_in_u.
Transform remap_pose(const Transform& base_in_u, const Transform& target_in_u);

/// Expresses a point given in {U} in the base frame {B}.
Point3 remap_point(const Transform& base_in_u, const Point3& p_in_u);

}  // namespace olp
