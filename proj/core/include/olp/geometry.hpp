#pragma once

#include <array>
#include <cmath>

namespace olp {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Vec3&) const = default;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// A point in space, in millimetres.
using Point3 = Vec3;

/// 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  bool operator==(const Mat3&) const = default;

  static Mat3 identity() { return {}; }

  double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }

  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 p;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(r, k) * o(k, c);
        p(r, c) = s;
      }
    return p;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 operator+(const Mat3& o) const {
    Mat3 s;
    for (size_t i = 0; i < 9; ++i) s.m[i] = m[i] + o.m[i];
    return s;
  }

  Mat3 scaled(double s) const {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
    return r;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  bool finite() const {
    for (double v : m)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

Mat3 rot_x(double angle);
Mat3 rot_y(double angle);
Mat3 rot_z(double angle);

/// Max absolute entry of Rt*R - I; zero for a perfectly orthonormal matrix.
double orthonormal_drift(const Mat3& r);

/// Orthogonal polar factor of a matrix with positive determinant
/// (the rotation nearest in Frobenius norm). Throws on det <= 0.
Mat3 nearest_rotation(const Mat3& r);

}  // namespace olp
