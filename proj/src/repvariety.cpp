#include "braidfix/repvariety.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace braidfix {

Configuration Configuration::from_vectors(std::span<const Vec3> vs) {
  std::vector<TracelessElement> elems;
  elems.reserve(vs.size());
  for (const auto &v : vs)
    elems.push_back(TracelessElement::normalized(v));
  return Configuration(std::move(elems));
}

std::vector<Vec3> Configuration::vectors() const {
  std::vector<Vec3> out;
  out.reserve(elems_.size());
  for (const auto &e : elems_)
    out.push_back(e.vec());
  return out;
}

Eigen::VectorXd Configuration::embed() const {
  Eigen::VectorXd out(3 * elems_.size());
  for (std::size_t j = 0; j < elems_.size(); ++j)
    out.segment<3>(static_cast<Eigen::Index>(3 * j)) = elems_[j].vec();
  return out;
}

Configuration conj_action(const Quaternion &g, const Configuration &c) {
  std::vector<TracelessElement> elems;
  elems.reserve(c.elems().size());
  for (const auto &e : c.elems())
    elems.push_back(conj_action(g, e));
  return Configuration(std::move(elems));
}

void hurwitz_letter(int letter, std::span<Vec3> vs) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
  const Vec3 a = vs[i], b = vs[i + 1];
  // the reflection amplifies any drift off the unit sphere by up to 3x per
  // letter, so the new vector is projected back each time
  if (letter > 0) {
    vs[i] = reflect(a, b).normalized();
    vs[i + 1] = a;
  } else {
    vs[i] = b;
    vs[i + 1] = reflect(b, a).normalized();
  }
}

void hurwitz_inplace(const BraidWord &b, std::span<Vec3> vs) {
  for (int g : b.letters())
    hurwitz_letter(g, vs);
}

Configuration hurwitz(const BraidWord &b, const Configuration &c) {
  if (b.strands() != c.n())
    throw DomainError("hurwitz: braid has " + std::to_string(b.strands()) +
                      " strands but configuration has " + std::to_string(c.n()));
  auto vs = c.vectors();
  hurwitz_inplace(b, vs);
  std::vector<TracelessElement> elems;
  elems.reserve(vs.size());
  for (const auto &v : vs)
    elems.push_back(TracelessElement::unchecked(v));
  return Configuration(std::move(elems));
}

Quaternion product(const Configuration &c) {
  Quaternion q = Quaternion::identity();
  for (const auto &e : c.elems())
    q = q * e.quaternion();
  return q;
}

double config_distance(const Configuration &a, const Configuration &b) {
  if (a.n() != b.n())
    throw DomainError("configuration sizes differ");
  return (a.embed() - b.embed()).norm();
}

bool is_irreducible(const Configuration &c, double tol) {
  if (c.n() < 2)
    return false;
  Eigen::Matrix3Xd m(3, c.n());
  for (int j = 0; j < c.n(); ++j)
    m.col(j) = c[static_cast<std::size_t>(j)].vec();
  Eigen::JacobiSVD<Eigen::Matrix3Xd> svd(m);
  return svd.singularValues()(1) > tol;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest rotation taking unit u to unit (1,0,0).
Quaternion rotation_to_x(const Vec3 &u) {
  const Vec3 x = Vec3::UnitX();
  const double c = u.dot(x);
  if (c < -1.0 + 1e-15)
    return Quaternion::from_axis_angle(Vec3::UnitZ(), kPi);
  // half-angle construction: q = (1 + u.x, u x x) normalized
  const Vec3 axis = u.cross(x);
  Quaternion q{1.0 + c, axis.x(), axis.y(), axis.z()};
  const double n = q.norm();
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

} // namespace

GaugeFix gauge_fix(const Configuration &c, double tol) {
  if (!is_irreducible(c, tol))
    throw DomainError("gauge_fix: configuration is reducible");
  const int n = c.n();
  const Quaternion g1 = rotation_to_x(c[0].vec());
  std::vector<Vec3> vs;
  vs.reserve(static_cast<std::size_t>(n));
  for (const auto &e : c.elems())
    vs.push_back(rotate(g1, e.vec()));

  int pivot = -1;
  double best = 0.0;
  // first vector clearly off the x axis; fall back to the most transverse one
  for (int j = 1; j < n; ++j) {
    const double off = std::hypot(vs[static_cast<std::size_t>(j)].y(),
                                  vs[static_cast<std::size_t>(j)].z());
    if (off > std::sqrt(tol)) {
      pivot = j;
      break;
    }
    if (off > best) {
      best = off;
      pivot = j;
    }
  }
  const Vec3 &p = vs[static_cast<std::size_t>(pivot)];
  // rotate about x so the pivot lands at z = 0, y > 0
  const double phi = std::atan2(p.z(), p.y());
  const Quaternion g2 = Quaternion::from_axis_angle(Vec3::UnitX(), -phi);
  for (auto &v : vs)
    v = rotate(g2, v);

  GaugeFix out;
  out.g = g2 * g1;
  out.slice.n = n;
  out.slice.pivot = pivot;
  out.slice.params.reserve(static_cast<std::size_t>(std::max(0, 2 * n - 3)));
  for (int j = 1; j < n; ++j) {
    const Vec3 &v = vs[static_cast<std::size_t>(j)];
    if (j == pivot) {
      out.slice.params.push_back(std::atan2(v.y(), v.x()));
    } else {
      out.slice.params.push_back(std::atan2(v.y(), v.x()));
      out.slice.params.push_back(std::acos(std::clamp(v.z(), -1.0, 1.0)));
    }
  }
  return out;
}

Configuration decode(const SlicePoint &s) {
  std::vector<TracelessElement> elems;
  elems.reserve(static_cast<std::size_t>(s.n));
  if (s.n >= 1)
    elems.push_back(TracelessElement::unchecked(Vec3::UnitX()));
  std::size_t k = 0;
  for (int j = 1; j < s.n; ++j) {
    if (j == s.pivot) {
      const double t = s.params.at(k++);
      elems.push_back(TracelessElement::unchecked({std::cos(t), std::sin(t), 0.0}));
    } else {
      const double az = s.params.at(k++);
      const double pol = s.params.at(k++);
      elems.push_back(TracelessElement::unchecked(
          {std::sin(pol) * std::cos(az), std::sin(pol) * std::sin(az), std::cos(pol)}));
    }
  }
  return Configuration(std::move(elems));
}

Configuration canonical(const Configuration &c, double tol) {
  return conj_action(gauge_fix(c, tol).g, c);
}

Fingerprint fingerprint(const Configuration &c) {
  Fingerprint f;
  const int n = c.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f.values.push_back(c[static_cast<std::size_t>(i)].vec().dot(c[static_cast<std::size_t>(j)].vec()));
  auto v = [&](int i) -> const Vec3 & { return c[static_cast<std::size_t>(i)].vec(); };
  for (int j = 2; j < n; ++j)
    f.values.push_back(v(0).dot(v(1).cross(v(j))));
  // the remaining triples keep chirality visible when v_1, v_2 are collinear
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (i != 0 || j != 1)
          f.values.push_back(v(i).dot(v(j).cross(v(k))));
  return f;
}

double fingerprint_distance(const Fingerprint &a, const Fingerprint &b) {
  if (a.values.size() != b.values.size())
    return std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    s += (a.values[i] - b.values[i]) * (a.values[i] - b.values[i]);
  return std::sqrt(s);
}

bool fingerprint_less(const Fingerprint &a, const Fingerprint &b) {
  return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                      b.values.end());
}

double fixed_point_residual(const BraidWord &b, const Configuration &c) {
  return config_distance(hurwitz(b, c), c);
}

} // namespace braidfix
