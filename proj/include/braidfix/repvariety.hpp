#pragma once

#include "braidfix/braidcore.hpp"
#include "braidfix/su2geom.hpp"

#include <span>
#include <vector>

namespace braidfix {

/// A point of Q_n: the images X_1..X_n of the meridian generators, each a
/// traceless SU(2) element.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<TracelessElement> elems) : elems_(std::move(elems)) {}
  /// Normalizes every vector.
  static Configuration from_vectors(std::span<const Vec3> vs);

  int n() const noexcept { return static_cast<int>(elems_.size()); }
  const TracelessElement &operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<TracelessElement> &elems() const noexcept { return elems_; }
  std::vector<Vec3> vectors() const;

  /// The 3n coordinates, block j holding X_j.
  Eigen::VectorXd embed() const;

private:
  std::vector<TracelessElement> elems_;
};

/// A point of H_n: two configurations with equal products.
struct HPoint {
  Configuration x;
  Configuration y;
};

/// Simultaneous conjugation of every element.
Configuration conj_action(const Quaternion &g, const Configuration &c);

/// Applies a single letter in place.
void hurwitz_letter(int letter, std::span<Vec3> vs);
/// Applies the letters of b left to right.
void hurwitz_inplace(const BraidWord &b, std::span<Vec3> vs);
Configuration hurwitz(const BraidWord &b, const Configuration &c);

/// X_1 X_2 ... X_n as quaternions.
Quaternion product(const Configuration &c);

/// Largest 3n distance between two configurations of the same size.
double config_distance(const Configuration &a, const Configuration &b);

struct RepTolerances {
  double irreducible = 1e-8;
  double slice_roundtrip = 1e-10;
};

/// Second singular value of the 3 x n matrix of vectors exceeds tol.
bool is_irreducible(const Configuration &c, double tol = RepTolerances{}.irreducible);

/// Gauge-fixed coordinates. The first vector is pinned to (1,0,0); the
/// pivot (first vector not collinear with it) lies in the upper half of the
/// xy-plane and is encoded by its polar angle; every other vector j >= 1 is
/// encoded as (azimuth, polar). Length 2n - 3.
struct SlicePoint {
  int n = 0;
  int pivot = 1;
  std::vector<double> params;
};

struct GaugeFix {
  SlicePoint slice;
  /// conj_action(g, c) == decode(slice)
  Quaternion g;
};

GaugeFix gauge_fix(const Configuration &c, double tol = RepTolerances{}.irreducible);
Configuration decode(const SlicePoint &s);
/// conj_action(gauge_fix(c).g, c), i.e. the canonical representative.
Configuration canonical(const Configuration &c, double tol = RepTolerances{}.irreducible);

/// Pairwise dot products v_i.v_j (i < j), then v_1.(v_2 x v_j) for j >= 3,
/// then every other triple v_i.(v_j x v_k), i < j < k. Invariant under
/// simultaneous rotation and separates rotation orbits.
struct Fingerprint {
  std::vector<double> values;
};

Fingerprint fingerprint(const Configuration &c);
double fingerprint_distance(const Fingerprint &a, const Fingerprint &b);
bool fingerprint_less(const Fingerprint &a, const Fingerprint &b);

/// Residual of the exact fixed point equation |hurwitz(b, c) - c| in R^3n.
double fixed_point_residual(const BraidWord &b, const Configuration &c);

} // namespace braidfix
