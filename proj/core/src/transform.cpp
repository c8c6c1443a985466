#include "olp/transform.hpp"

#include <cmath>

#include "olp/error.hpp"

namespace olp {
namespace {

constexpr double kConstructionTolerance = 1e-9;
constexpr double kComposeDriftLimit = 1e-12;

Mat3 adjugate_inverse(const Mat3& a) {
  const double d = a.det();
  Mat3 inv;
  inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
  inv(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
  inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
  inv(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
  inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
  inv(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
  inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
  inv(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
  inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
  return inv;
}

}  // namespace

double orthonormal_drift(const Mat3& r) {
  const Mat3 g = r.transposed() * r;
  double drift = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      drift = std::max(drift, std::abs(g(i, j) - target));
    }
  return drift;
}

Mat3 nearest_rotation(const Mat3& r) {
  if (!r.finite()) throw Error("rotation block has non-finite entries");
  if (r.det() <= 0.0)
    throw Error("rotation block is not right-handed (determinant <= 0)");
  // Higham's iteration for the orthogonal polar factor. Quadratic
  // convergence; near-orthonormal inputs settle in two or three steps.
  Mat3 x = r;
  for (int i = 0; i < 32 && orthonormal_drift(x) > 1e-15; ++i) {
    x = (x + adjugate_inverse(x).transposed()).scaled(0.5);
  }
  return x;
}

Mat3 rot_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r.m = {1, 0, 0,
         0, c, -s,
         0, s, c};
  return r;
}

Mat3 rot_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r.m = {c, 0, s,
         0, 1, 0,
         -s, 0, c};
  return r;
}

Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r.m = {c, -s, 0,
         s, c, 0,
         0, 0, 1};
  return r;
}

Transform::Transform(const Mat3& rotation, const Vec3& translation)
    : rotation_(rotation), translation_(translation) {
  if (!rotation.finite() || !translation.finite())
    throw Error("transform has non-finite entries");
  if (orthonormal_drift(rotation) > kConstructionTolerance)
    throw Error("rotation is not orthonormal within 1e-9");
  if (std::abs(rotation.det() - 1.0) > kConstructionTolerance)
    throw Error("rotation determinant is not +1 within 1e-9");
}

Transform Transform::projected(const Mat3& rotation, const Vec3& translation) {
  Mat3 r = rotation;
  if (orthonormal_drift(r) > kComposeDriftLimit) r = nearest_rotation(r);
  return Transform(r, translation);
}

Transform compose(const Transform& a, const Transform& b) {
  Mat3 r = a.rotation() * b.rotation();
  const Vec3 t = a.rotation() * b.translation() + a.translation();
  if (orthonormal_drift(r) > kComposeDriftLimit) r = nearest_rotation(r);
  return Transform(r, t);
}

Transform invert(const Transform& t) {
  const Mat3 rt = t.rotation().transposed();
  return Transform(rt, -(rt * t.translation()));
}

Transform remap_pose(const Transform& base_in_u, const Transform& target_in_u) {
  return compose(invert(base_in_u), target_in_u);
}

Point3 remap_point(const Transform& base_in_u, const Point3& p_in_u) {
  return invert(base_in_u).apply(p_in_u);
}

}  // namespace olp
