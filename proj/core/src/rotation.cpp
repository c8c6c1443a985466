#include "olp/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "olp/error.hpp"
#include "olp/transform.hpp"

namespace olp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGimbalLockBand = 1e-8;
constexpr double kOrthonormalTolerance = 1e-9;

void require_rotation(const Mat3& r) {
  if (orthonormal_drift(r) > kOrthonormalTolerance ||
      std::abs(r.det() - 1.0) > kOrthonormalTolerance)
    throw Error("matrix is not a rotation within 1e-9");
}

}  // namespace

double normalize_angle(double angle) {
  double a = std::remainder(angle, 2.0 * kPi);
  if (a == -kPi) a = kPi;
  // remainder() can return -0.0; keep the canonical zero.
  if (a == 0.0) a = 0.0;
  return a;
}

UnitQuaternion UnitQuaternion::unit(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!std::isfinite(n) || n < 1e-12) throw Error("quaternion norm is zero");
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  const bool flip =
      w < 0.0 ||
      (w == 0.0 && (x < 0.0 || (x == 0.0 && (y < 0.0 || (y == 0.0 && z < 0.0)))));
  if (flip) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  UnitQuaternion q;
  q.w = w + 0.0;  // fold -0.0 into +0.0
  q.x = x + 0.0;
  q.y = y + 0.0;
  q.z = z + 0.0;
  return q;
}

double rotation_angle_between(const UnitQuaternion& a, const UnitQuaternion& b) {
  const double dm = std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                              (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
  const double dp = std::sqrt((a.w + b.w) * (a.w + b.w) + (a.x + b.x) * (a.x + b.x) +
                              (a.y + b.y) * (a.y + b.y) + (a.z + b.z) * (a.z + b.z));
  // Quaternion angle is asin-of-chord; the rotation angle is twice that.
  const double chord = std::min(dm, dp);
  return 4.0 * std::asin(std::min(1.0, chord / 2.0));
}

Mat3 euler_to_rot(const OrientationTriple& e) {
  return rot_x(e.alpha) * rot_y(e.beta) * rot_z(e.gamma);
}

OrientationTriple rot_to_euler(const Mat3& r) {
  require_rotation(r);
  OrientationTriple e;
  const double cb = std::sqrt(r(0, 0) * r(0, 0) + r(0, 1) * r(0, 1));
  if (cb < kGimbalLockBand) {
    e.gimbal_locked = true;
    e.alpha = 0.0;
    if (r(0, 2) > 0.0) {
      e.beta = kPi / 2.0;
      e.gamma = std::atan2(r(1, 0), -r(2, 0));
    } else {
      e.beta = -kPi / 2.0;
      e.gamma = std::atan2(r(1, 0), r(2, 0));
    }
  } else {
    e.beta = std::atan2(r(0, 2), cb);
    e.alpha = std::atan2(-r(1, 2) / cb, r(2, 2) / cb);
    e.gamma = std::atan2(-r(0, 1) / cb, r(0, 0) / cb);
  }
  e.alpha = normalize_angle(e.alpha);
  e.beta = normalize_angle(e.beta);
  e.gamma = normalize_angle(e.gamma);
  return e;
}

UnitQuaternion rot_to_quat(const Mat3& r) {
  require_rotation(r);
  const double trace = r(0, 0) + r(1, 1) + r(2, 2);
  double w, x, y, z;
  if (trace >= r(0, 0) && trace >= r(1, 1) && trace >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + trace);
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  return UnitQuaternion::unit(w, x, y, z);
}

Mat3 quat_to_rot(const UnitQuaternion& q) {
  const double n = std::sqrt(q.dot(q));
  if (!std::isfinite(n) || n < 1e-12) throw Error("quaternion norm is zero");
  const double w = q.w / n, x = q.x / n, y = q.y / n, z = q.z / n;
  Mat3 r;
  r.m = {1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y),
         2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x),
         2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)};
  return r;
}

}  // namespace olp
