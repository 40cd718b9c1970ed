#pragma once

#include "braidfix/laurent.hpp"
#include "braidfix/repvariety.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace braidfix {

/// Angle r * pi with r exact, kept in [0, 2).
class PiAngle {
public:
  PiAngle() = default;
  explicit PiAngle(const Rational &r);
  static PiAngle from_fraction(std::int64_t num, std::int64_t den);

  const Rational &coefficient() const noexcept { return r_; }
  double radians() const;
  /// "0", "1 π", "1/3 π"
  std::string to_string() const;
  PiAngle operator+(const PiAngle &o) const { return PiAngle(r_ + o.r_); }
  PiAngle operator-(const PiAngle &o) const { return PiAngle(r_ - o.r_); }
  PiAngle operator-() const { return PiAngle(-r_); }
  /// reflection a -> 2 pi - a
  PiAngle folded() const { return PiAngle(-r_); }

  friend bool operator==(const PiAngle &, const PiAngle &) = default;

private:
  Rational r_ = 0;
};

/// (alpha, theta) ~ (2 pi - alpha, 2 pi - theta); cone points at alpha,
/// theta in {0, pi}.
struct PillowPoint {
  double alpha = 0.0;
  double theta = 0.0;
};

/// P(t) = cos t i + sin t j
Vec3 pillow_p(double t);

/// X = (P(0), P(pi - alpha)), Y = (P(theta), P(theta + pi - alpha)).
HPoint chart(const PillowPoint &p);

using AngleMatrix = std::array<std::array<std::int64_t, 2>, 2>;

/// Action of a B_2 word on the angle pair of a coplanar configuration.
AngleMatrix angle_matrix(const BraidWord &b);
AngleMatrix multiply(const AngleMatrix &a, const AngleMatrix &b);

/// theta = 0 for the identity and theta = q (pi - alpha) mod 2 pi for the
/// braid, q = A[0][1].
struct GammaCurves {
  std::int64_t q = 0;
  /// the two curves coincide (q = 0)
  bool overlap = false;
  std::string id_relation;
  std::string beta_relation;
};

GammaCurves gamma_curves(const BraidWord &b);

struct ExactPoint {
  PiAngle alpha;
  PiAngle theta;
  bool cone = false;
  /// X of the chart at this point
  Configuration configuration() const;
};

struct ExactIntersection {
  std::int64_t q = 0;
  /// representatives with alpha in (0, pi), sorted by alpha
  std::vector<ExactPoint> irreducible;
  std::vector<ExactPoint> cone;
};

/// Intersections of the two curves, folded by the involution. Throws
/// DomainError for even q (link closure) or strand count != 2.
ExactIntersection exact_classes(const BraidWord &b);

struct TorusLift {
  AngleMatrix L{};
  PiAngle shift_alpha;
  PiAngle shift_theta;
  std::int64_t det_i_minus_l = 0;
  std::string caveat;
};

TorusLift torus_lift(const BraidWord &b);

extern const char *const kPerturbationCaveat;

struct CurveSample {
  std::string curve; // "id" or "beta"
  double alpha = 0.0;
  double theta = 0.0;
};

/// samples + 1 points of each curve over alpha in [0, 2 pi].
std::vector<CurveSample> curve_samples(const BraidWord &b, int samples);
void write_curve_csv(std::ostream &os, const std::vector<CurveSample> &rows);

} // namespace braidfix
