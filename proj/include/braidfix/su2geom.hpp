#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace braidfix {

using Vec3 = Eigen::Vector3d;

/// w + x i + y j + z k. Unit quaternions are the elements of SU(2).
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion pure(const Vec3 &v) { return {0.0, v.x(), v.y(), v.z()}; }
  /// Rotation by `angle` about the unit vector `axis` under conj_action.
  static Quaternion from_axis_angle(const Vec3 &axis, double angle);

  Vec3 vec() const { return {x, y, z}; }
  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Quaternion inverse() const;
};

Quaternion qmul(const Quaternion &a, const Quaternion &b);
inline Quaternion operator*(const Quaternion &a, const Quaternion &b) { return qmul(a, b); }
Quaternion operator-(const Quaternion &a);
double max_abs_diff(const Quaternion &a, const Quaternion &b);

/// A trace-free element of SU(2): a pure unit quaternion, stored as its
/// unit 3-vector. Conjugation by SU(2) acts on it as an SO(3) rotation.
class TracelessElement {
public:
  TracelessElement() : v_(1.0, 0.0, 0.0) {}
  /// Throws DomainError unless |v| = 1 within 1e-9.
  explicit TracelessElement(const Vec3 &v);
  static TracelessElement normalized(const Vec3 &v);
  static TracelessElement unchecked(const Vec3 &v) { return TracelessElement(v, 0); }

  const Vec3 &vec() const noexcept { return v_; }
  Quaternion quaternion() const { return Quaternion::pure(v_); }

private:
  TracelessElement(const Vec3 &v, int) : v_(v) {}
  Vec3 v_;
};

/// Rotation of v by the SO(3) image of g. Cheap path for unit g.
Vec3 rotate(const Quaternion &g, const Vec3 &v);

/// Pure part of g t g^-1; throws DomainError when |g| is off 1 by > 1e-9.
TracelessElement conj_action(const Quaternion &g, const TracelessElement &t);

/// u t u^-1 for traceless u, in closed form 2(u.v)u - v.
inline Vec3 reflect(const Vec3 &u, const Vec3 &v) { return 2.0 * u.dot(v) * u - v; }
TracelessElement reflect(const TracelessElement &u, const TracelessElement &t);

/// 3x3 rotation matrix of a unit quaternion.
Eigen::Matrix3d rotation_matrix(const Quaternion &g);
/// Unit quaternion (w >= 0) for a proper rotation matrix.
Quaternion quaternion_from_rotation(const Eigen::Matrix3d &r);

struct Alignment {
  Quaternion g;
  /// min over rotations of sum_i |g A_i g^-1 - B_i|^2
  double d = 0.0;
};

/// Best proper rotation taking A onto B (Kabsch via SVD of the cross
/// covariance, determinant +1 branch).
Alignment align(std::span<const TracelessElement> a, std::span<const TracelessElement> b);

} // namespace braidfix
