// Test-side reference implementations, kept independent of the library's
// own math paths: dense 4x4 homogeneous algebra, Gauss-Jordan inversion and
// axis-angle rotation construction.
#pragma once

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "olp/geometry.hpp"
#include "olp/transform.hpp"

namespace oracle {

struct Mat4 {
  std::array<double, 16> m{};

  static Mat4 identity() {
    Mat4 i;
    i.m = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    return i;
  }

  double at(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }
  double& at(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }

  Mat4 operator*(const Mat4& o) const {
    Mat4 p;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += at(r, k) * o.at(k, c);
        p.at(r, c) = s;
      }
    return p;
  }
};

inline Mat4 to_mat4(const olp::Mat3& r, const olp::Vec3& t) {
  Mat4 h = Mat4::identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h.at(i, j) = r(i, j);
  h.at(0, 3) = t.x;
  h.at(1, 3) = t.y;
  h.at(2, 3) = t.z;
  return h;
}

inline Mat4 to_mat4(const olp::Transform& t) {
  return to_mat4(t.rotation(), t.translation());
}

/// General 4x4 inverse by Gauss-Jordan elimination with partial pivoting.
inline Mat4 gauss_inverse(Mat4 a) {
  Mat4 inv = Mat4::identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
    if (std::abs(a.at(pivot, col)) < 1e-300)
      throw std::runtime_error("singular matrix in gauss_inverse");
    if (pivot != col)
      for (int c = 0; c < 4; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    const double scale = a.at(col, col);
    for (int c = 0; c < 4; ++c) {
      a.at(col, c) /= scale;
      inv.at(col, c) /= scale;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a.at(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < 4; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0.0;
  for (size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

/// Axis-angle rotation via the Rodrigues formula, written out elementwise.
inline olp::Mat3 rodrigues(olp::Vec3 axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) throw std::runtime_error("zero axis");
  const double kx = axis.x / n, ky = axis.y / n, kz = axis.z / n;
  const double c = std::cos(angle), s = std::sin(angle), v = 1.0 - c;
  olp::Mat3 r;
  r.m = {c + kx * kx * v,      kx * ky * v - kz * s, kx * kz * v + ky * s,
         ky * kx * v + kz * s, c + ky * ky * v,      ky * kz * v - kx * s,
         kz * kx * v - ky * s, kz * ky * v + kx * s, c + kz * kz * v};
  return r;
}

inline double frobenius(const olp::Mat3& a, const olp::Mat3& b) {
  double sum = 0.0;
  for (size_t i = 0; i < 9; ++i) {
    const double d = a.m[i] - b.m[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Deterministic random inputs at desk scale (coordinates within ~250 mm).
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  olp::Vec3 unit_axis() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    olp::Vec3 v;
    do {
      v = {gauss(gen_), gauss(gen_), gauss(gen_)};
    } while (v.norm() < 1e-6);
    return v / v.norm();
  }

  olp::Mat3 rotation() { return rodrigues(unit_axis(), uniform(0.0, 3.14159265358979)); }

  olp::Vec3 point(double span = 250.0) {
    return {uniform(-span, span), uniform(-span, span), uniform(-span, span)};
  }

  olp::Transform rigid(double span = 250.0) {
    return olp::Transform(rotation(), point(span));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
