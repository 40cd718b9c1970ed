#include "braidfix/su2geom.hpp"

#include "braidfix/braidcore.hpp"

#include <algorithm>
#include <cmath>

namespace braidfix {

Quaternion Quaternion::from_axis_angle(const Vec3 &axis, double angle) {
  const double s = std::sin(0.5 * angle);
  const Vec3 u = axis.normalized();
  return {std::cos(0.5 * angle), s * u.x(), s * u.y(), s * u.z()};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::inverse() const {
  const double n2 = w * w + x * x + y * y + z * z;
  return {w / n2, -x / n2, -y / n2, -z / n2};
}

Quaternion qmul(const Quaternion &a, const Quaternion &b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator-(const Quaternion &a) { return {-a.w, -a.x, -a.y, -a.z}; }

double max_abs_diff(const Quaternion &a, const Quaternion &b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

TracelessElement::TracelessElement(const Vec3 &v) : v_(v) {
  if (std::abs(v.norm() - 1.0) > 1e-9)
    throw DomainError("traceless element must be a unit vector");
}

TracelessElement TracelessElement::normalized(const Vec3 &v) {
  const double n = v.norm();
  if (n == 0.0)
    throw DomainError("cannot normalize the zero vector");
  return unchecked(v / n);
}

Vec3 rotate(const Quaternion &g, const Vec3 &v) {
  const Vec3 u = g.vec();
  const Vec3 t = 2.0 * u.cross(v);
  return v + g.w * t + u.cross(t);
}

TracelessElement conj_action(const Quaternion &g, const TracelessElement &t) {
  if (std::abs(g.norm() - 1.0) > 1e-9)
    throw DomainError("conjugating element is not a unit quaternion");
  return TracelessElement::unchecked(rotate(g, t.vec()));
}

TracelessElement reflect(const TracelessElement &u, const TracelessElement &t) {
  return TracelessElement::unchecked(reflect(u.vec(), t.vec()));
}

Eigen::Matrix3d rotation_matrix(const Quaternion &g) {
  Eigen::Matrix3d r;
  r.col(0) = rotate(g, Vec3::UnitX());
  r.col(1) = rotate(g, Vec3::UnitY());
  r.col(2) = rotate(g, Vec3::UnitZ());
  return r;
}

Quaternion quaternion_from_rotation(const Eigen::Matrix3d &r) {
  Eigen::Quaterniond q(r);
  q.normalize();
  Quaternion out{q.w(), q.x(), q.y(), q.z()};
  if (out.w < 0.0)
    out = -out;
  return out;
}

Alignment align(std::span<const TracelessElement> a, std::span<const TracelessElement> b) {
  if (a.size() != b.size() || a.empty())
    throw DomainError("align needs two non-empty lists of equal length");
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    cov += a[i].vec() * b[i].vec().transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  if ((svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0)
    d(2, 2) = -1.0;
  const Eigen::Matrix3d r = svd.matrixV() * d * svd.matrixU().transpose();
  Alignment out;
  out.g = quaternion_from_rotation(r);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.d += (rotate(out.g, a[i].vec()) - b[i].vec()).squaredNorm();
  return out;
}

} // namespace braidfix
