#include "braidfix/pillowcase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace braidfix {

namespace {

constexpr double kPi = std::numbers::pi;

BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

void require_b2(const BraidWord &b, const char *what) {
  if (b.strands() != 2)
    throw DomainError(std::string(what) + ": needs a 2-strand braid, got " +
                      std::to_string(b.strands()));
}

} // namespace

PiAngle::PiAngle(const Rational &r) {
  // reduce mod 2
  const BigInt k = floor_div(numerator(r), 2 * denominator(r));
  r_ = r - Rational(2 * k);
}

PiAngle PiAngle::from_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::invalid_argument("PiAngle: zero denominator");
  return PiAngle(Rational(num) / den);
}

double PiAngle::radians() const { return r_.convert_to<double>() * kPi; }

std::string PiAngle::to_string() const {
  if (r_ == 0)
    return "0";
  std::ostringstream os;
  os << r_ << " π";
  return os.str();
}

Vec3 pillow_p(double t) { return {std::cos(t), std::sin(t), 0.0}; }

HPoint chart(const PillowPoint &p) {
  const double d = kPi - p.alpha;
  const std::array<Vec3, 2> x{pillow_p(0.0), pillow_p(d)};
  const std::array<Vec3, 2> y{pillow_p(p.theta), pillow_p(p.theta + d)};
  return {Configuration::from_vectors(x), Configuration::from_vectors(y)};
}

AngleMatrix multiply(const AngleMatrix &a, const AngleMatrix &b) {
  AngleMatrix r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

AngleMatrix angle_matrix(const BraidWord &b) {
  require_b2(b, "angle_matrix");
  static constexpr AngleMatrix kPos{{{2, -1}, {1, 0}}};
  static constexpr AngleMatrix kNeg{{{0, 1}, {-1, 2}}};
  AngleMatrix a{{{1, 0}, {0, 1}}};
  // letters act left to right, so later letters multiply on the left
  for (int g : b.letters())
    a = multiply(g > 0 ? kPos : kNeg, a);
  return a;
}

GammaCurves gamma_curves(const BraidWord &b) {
  GammaCurves g;
  g.q = angle_matrix(b)[0][1];
  g.overlap = g.q == 0;
  g.id_relation = "theta = 0";
  g.beta_relation = "theta = " + std::to_string(g.q) + " (π - alpha) mod 2π";
  return g;
}

Configuration ExactPoint::configuration() const {
  const std::array<Vec3, 2> x{pillow_p(0.0), pillow_p(kPi - alpha.radians())};
  return Configuration::from_vectors(x);
}

ExactIntersection exact_classes(const BraidWord &b) {
  require_b2(b, "exact_classes");
  ExactIntersection out;
  out.q = angle_matrix(b)[0][1];
  if (out.q % 2 == 0)
    throw DomainError("exact_classes: q = " + std::to_string(out.q) +
                      " is even, closure is a link, not a knot");
  const std::int64_t m = out.q < 0 ? -out.q : out.q;
  std::vector<ExactPoint> pts;
  for (std::int64_t k = 0; k < m; ++k) {
    // q (pi - alpha) = 2 pi k
    ExactPoint p;
    p.alpha = PiAngle(Rational(1) - Rational(2 * k) / out.q);
    const Rational &r = p.alpha.coefficient();
    p.cone = r == 0 || r == 1;
    if (!p.cone && r > 1)
      p.alpha = p.alpha.folded();
    if (std::none_of(pts.begin(), pts.end(),
                     [&](const ExactPoint &e) { return e.alpha == p.alpha; }))
      pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const ExactPoint &a, const ExactPoint &b) {
    return a.alpha.coefficient() < b.alpha.coefficient();
  });
  for (auto &p : pts)
    (p.cone ? out.cone : out.irreducible).push_back(p);
  return out;
}

const char *const kPerturbationCaveat =
    "Degenerate: f_beta conserves the product coordinate, so det(I - L) = 0 and every "
    "fixed point of the lift lies on a fixed circle; a perturbation of f_beta by a "
    "compactly support isotopy is required before Nielsen counting. No Nielsen number is "
    "reported.";

TorusLift torus_lift(const BraidWord &b) {
  require_b2(b, "torus_lift");
  const std::int64_t q = angle_matrix(b)[0][1];
  TorusLift t;
  t.L = {{{1, 0}, {-q, -1}}};
  t.shift_alpha = PiAngle(0);
  t.shift_theta = PiAngle(Rational(q));
  t.det_i_minus_l = (1 - t.L[0][0]) * (1 - t.L[1][1]) - t.L[0][1] * t.L[1][0];
  t.caveat = kPerturbationCaveat;
  return t;
}

std::vector<CurveSample> curve_samples(const BraidWord &b, int samples) {
  if (samples < 1)
    throw DomainError("curve_samples: need at least one step");
  const std::int64_t q = gamma_curves(b).q;
  std::vector<CurveSample> rows;
  rows.reserve(2 * static_cast<std::size_t>(samples + 1));
  for (int k = 0; k <= samples; ++k)
    rows.push_back({"id", 2 * kPi * k / samples, 0.0});
  for (int k = 0; k <= samples; ++k) {
    const double a = 2 * kPi * k / samples;
    double th = std::fmod(static_cast<double>(q) * (kPi - a), 2 * kPi);
    if (th < 0)
      th += 2 * kPi;
    rows.push_back({"beta", a, th});
  }
  return rows;
}

void write_curve_csv(std::ostream &os, const std::vector<CurveSample> &rows) {
  os << "curve,alpha,theta\n";
  os.precision(17);
  for (const auto &r : rows)
    os << r.curve << ',' << r.alpha << ',' << r.theta << '\n';
}

} // namespace braidfix
