#pragma once

#include "pmpc/core/types.hpp"

namespace pmpc::quat {

inline Vec4 identity() { return Vec4{1.0, 0.0, 0.0, 0.0}; }

inline Vec4 normalized(const Vec4& q) { return q / q.norm(); }

/// Hamilton product a ⊗ b, both (w,x,y,z).
inline Vec4 multiply(const Vec4& a, const Vec4& b) {
  return Vec4{a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3),
              a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2),
              a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1),
              a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0)};
}

/// Left product matrix Λ(q) with q ⊗ p = Λ(q) p.
inline Mat4 product_matrix(const Vec4& q) {
  Mat4 m;
  m << q(0), -q(1), -q(2), -q(3),
       q(1),  q(0), -q(3),  q(2),
       q(2),  q(3),  q(0), -q(1),
       q(3), -q(2),  q(1),  q(0);
  return m;
}

/// Body-to-world rotation matrix of a unit quaternion (polynomial form).
inline Mat3 to_rotation(const Vec4& q) {
  const double w = q(0), x = q(1), y = q(2), z = q(3);
  Mat3 r;
  r << 1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y),
       2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x),
       2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y);
  return r;
}

/// Third column of to_rotation(q): the world-frame direction of body-z.
inline Vec3 rotate_body_z(const Vec4& q) {
  const double w = q(0), x = q(1), y = q(2), z = q(3);
  return Vec3{2.0 * (x * z + w * y), 2.0 * (y * z - w * x), 1.0 - 2.0 * (x * x + y * y)};
}

inline Vec4 from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) return identity();
  const double half = 0.5 * angle;
  const Vec3 u = axis / n;
  return Vec4{std::cos(half), u.x() * std::sin(half), u.y() * std::sin(half),
              u.z() * std::sin(half)};
}

/// Quaternion kinematics: q̇ = ½ Λ(q) (0, ω).
inline Vec4 derivative(const Vec4& q, const Vec3& omega) {
  return Vec4{0.5 * (-q(1) * omega(0) - q(2) * omega(1) - q(3) * omega(2)),
              0.5 * (q(0) * omega(0) + q(2) * omega(2) - q(3) * omega(1)),
              0.5 * (q(0) * omega(1) + q(3) * omega(0) - q(1) * omega(2)),
              0.5 * (q(0) * omega(2) + q(1) * omega(1) - q(2) * omega(0))};
}

}  // namespace pmpc::quat
