// Random generators and independent reference computations for the tests.
#pragma once

#include "braidfix/braidcore.hpp"
#include "braidfix/laurent.hpp"
#include "braidfix/repvariety.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace support {

using namespace braidfix;

inline Vec3 random_unit(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  do
    v = Vec3(n(rng), n(rng), n(rng));
  while (v.norm() < 1e-6);
  return v.normalized();
}

inline Quaternion random_rotation(std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Quaternion q{n(rng), n(rng), n(rng), n(rng)};
  const double s = q.norm();
  return {q.w / s, q.x / s, q.y / s, q.z / s};
}

inline Configuration random_config(std::mt19937_64 &rng, int n) {
  std::vector<Vec3> vs;
  for (int i = 0; i < n; ++i)
    vs.push_back(random_unit(rng));
  return Configuration::from_vectors(vs);
}

inline BraidWord random_braid(std::mt19937_64 &rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> col(1, n - 1);
  std::vector<int> letters(static_cast<std::size_t>(len(rng)));
  for (auto &g : letters)
    g = col(rng) * (rng() % 2 == 0 ? 1 : -1);
  return BraidWord(n, letters);
}

/// Random braid whose closure is a knot and whose diagram is connected.
inline BraidWord random_knot_braid(std::mt19937_64 &rng, int n, int max_len) {
  for (;;) {
    BraidWord b = random_braid(rng, n, max_len);
    if (!is_knot_closure(b))
      continue;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int g : b.letters())
      used[static_cast<std::size_t>(std::abs(g))] = true;
    bool connected = true;
    for (int i = 1; i < n; ++i)
      connected = connected && used[static_cast<std::size_t>(i)];
    if (connected)
      return b;
  }
}

inline std::vector<Vec3> vecs(const Configuration &c) { return c.vectors(); }

// ---- oracle: braid action through quaternion products

/// sigma_i: (X_i, X_{i+1}) -> (X_i X_{i+1} X_i^-1, X_i), inverse letters
/// (X_{i+1}, X_{i+1}^-1 X_i X_{i+1}); computed with full quaternion products.
inline std::vector<Quaternion> quaternion_hurwitz(const BraidWord &b, std::vector<Quaternion> x) {
  for (int g : b.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g) - 1);
    const Quaternion a = x[i], c = x[i + 1];
    if (g > 0) {
      x[i] = a * c * a.inverse();
      x[i + 1] = a;
    } else {
      x[i] = c;
      x[i + 1] = c.inverse() * a * c;
    }
  }
  return x;
}

// ---- oracle: Alexander polynomial by Fox calculus on the braid action

/// Fox derivative of w with respect to x_j, abelianized x_k -> t.
inline LaurentPoly fox_derivative(const FreeWord &w, int j) {
  LaurentPoly out;
  int power = 0; // abelianized prefix
  for (const auto &l : w.letters()) {
    const int step = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exp); ++k) {
      if (l.gen == j) {
        if (step > 0)
          out += LaurentPoly::monomial(1, power);
        else
          out -= LaurentPoly::monomial(1, power - 1);
      }
      power += step;
    }
  }
  return out;
}

/// Alexander polynomial from the presentation <x_i | beta(x_i) x_i^-1>,
/// first minor of the Fox matrix. Defined up to +-t^k.
inline LaurentPoly fox_alexander(const BraidWord &b) {
  const int n = b.strands();
  if (n == 1)
    return 1;
  PolyMatrix m(static_cast<std::size_t>(n - 1), std::vector<LaurentPoly>(static_cast<std::size_t>(n - 1)));
  for (int i = 1; i < n; ++i) {
    const FreeWord r = free_action(b, FreeWord::generator(i)) * FreeWord::generator(i, -1);
    for (int j = 1; j < n; ++j)
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = fox_derivative(r, j);
  }
  return poly_determinant(m);
}

// ---- oracle: Gauss linking integral of two closed polygons

/// Signed solid angle sum over segment pairs (exact for polygons).
inline double gauss_linking(const std::vector<Vec3> &a, const std::vector<Vec3> &b) {
  double total = 0.0;
  auto safe_asin = [](double x) { return std::asin(std::clamp(x, -1.0, 1.0)); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec3 p1 = a[i], p2 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec3 p3 = b[j], p4 = b[(j + 1) % b.size()];
      const Vec3 r13 = p3 - p1, r14 = p4 - p1, r23 = p3 - p2, r24 = p4 - p2;
      Vec3 n1 = r13.cross(r14), n2 = r14.cross(r24), n3 = r24.cross(r23), n4 = r23.cross(r13);
      if (n1.norm() < 1e-14 || n2.norm() < 1e-14 || n3.norm() < 1e-14 || n4.norm() < 1e-14)
        continue;
      n1.normalize();
      n2.normalize();
      n3.normalize();
      n4.normalize();
      const double omega = safe_asin(n1.dot(n2)) + safe_asin(n2.dot(n3)) +
                           safe_asin(n3.dot(n4)) + safe_asin(n4.dot(n1));
      const double s = (p4 - p3).cross(p2 - p1).dot(r13);
      total += s > 0 ? omega : -omega;
    }
  }
  return total / (4.0 * std::numbers::pi);
}

inline std::vector<Vec3> circle(const Vec3 &center, const Vec3 &e1, const Vec3 &e2, double r,
                                int samples = 64) {
  std::vector<Vec3> out;
  for (int k = 0; k < samples; ++k) {
    const double t = 2 * std::numbers::pi * k / samples;
    out.push_back(center + r * (std::cos(t) * e1 + std::sin(t) * e2));
  }
  return out;
}

} // namespace support
