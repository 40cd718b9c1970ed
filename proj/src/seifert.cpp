// Seifert matrix of a closed braid by explicit embedding.
//
// Strand k runs along the edge x = k of a disk D_k at height z = k that
// covers x >= k; disks are nested rectangles so the closing arcs never
// cross. The letter at y = p in column i is a band whose core runs straight
// from (i, p, i) to (i + 1, p, i + 1) with a half twist whose sense gives
// the crossing sign. For two consecutive letters p < q of one column the
// loop goes up band p, along D_{i+1}, down band q and back along D_i.
// Entries are linking numbers of a loop with a pushed-off loop, counted as
// signed crossings of the two polygons.

#include "braidfix/knotoracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace braidfix {
namespace detail {

namespace {

constexpr double kLowTrack = 0.3; // loop track on the lower disk, from its edge
constexpr double kHighTrack = 0.6;
constexpr double kPush = 0.02;
constexpr int kBandSamples = 24;

// surface normal along the band core; equals -z's fold partner at s = 0
Vec3 band_normal(double s, double twist) {
  const Vec3 n0 = Vec3(-1.0, 0.0, 1.0) / std::sqrt(2.0);
  const double a = std::numbers::pi * s;
  return std::cos(a) * n0 - twist * std::sin(a) * Vec3::UnitY();
}

// Appends the band core from the lower disk up (or the reverse).
void append_band(Polygon &loop, Polygon &pushed, int col, double y, double twist, bool upward) {
  for (int k = 0; k <= kBandSamples; ++k) {
    const double s = upward ? double(k) / kBandSamples : 1.0 - double(k) / kBandSamples;
    const Vec3 c(col + s, y, col + s);
    if (k > 0 && k < kBandSamples)
      loop.push_back(c);
    pushed.push_back(c + kPush * band_normal(s, twist));
  }
}

void append_disk(Polygon &loop, Polygon &pushed, const Vec3 &p) {
  loop.push_back(p);
  pushed.push_back(p - kPush * Vec3::UnitZ());
}

} // namespace

SeifertLoops seifert_loops(const BraidWord &b) {
  const int n = b.strands();
  std::vector<std::vector<std::pair<double, int>>> columns(static_cast<std::size_t>(n));
  const auto &w = b.letters();
  for (std::size_t k = 0; k < w.size(); ++k)
    columns[static_cast<std::size_t>(std::abs(w[k]))].push_back({double(k), w[k] > 0 ? 1 : -1});
  for (int i = 1; i < n; ++i)
    if (columns[static_cast<std::size_t>(i)].empty())
      throw DomainError("seifert_matrix: column " + std::to_string(i) +
                        " never crosses, the diagram is split");

  SeifertLoops out;
  for (int i = 1; i < n; ++i) {
    const auto &col = columns[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k + 1 < col.size(); ++k) {
      const auto [p, sp] = col[k];
      const auto [q, sq] = col[k + 1];
      // a positive letter is a positive crossing when the band twists by -1
      const double tp = -sp, tq = -sq;
      const double lo = i, hi = i + 1;
      Polygon loop, pushed;
      append_disk(loop, pushed, {lo + kLowTrack, p, lo});
      append_disk(loop, pushed, {lo, p, lo});
      append_band(loop, pushed, i, p, tp, true);
      append_disk(loop, pushed, {hi, p, hi});
      append_disk(loop, pushed, {hi + kHighTrack, p, hi});
      append_disk(loop, pushed, {hi + kHighTrack, q, hi});
      append_disk(loop, pushed, {hi, q, hi});
      append_band(loop, pushed, i, q, tq, false);
      append_disk(loop, pushed, {lo, q, lo});
      append_disk(loop, pushed, {lo + kLowTrack, q, lo});
      out.loops.push_back(std::move(loop));
      out.pushed.push_back(std::move(pushed));
    }
  }
  return out;
}

namespace {

struct Crossings {
  bool generic = true;
  int a_over = 0;
  int b_over = 0;
};

Crossings count_crossings(const Polygon &a, const Polygon &b, const Vec3 &d) {
  Vec3 e1 = d.unitOrthogonal();
  Vec3 e2 = d.cross(e1);
  auto proj = [&](const Vec3 &p) { return std::array<double, 2>{p.dot(e1), p.dot(e2)}; };
  Crossings out;
  constexpr double kEdge = 1e-9;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Vec3 &a0 = a[i], &a1 = a[(i + 1) % a.size()];
    const auto pa = proj(a0), qa = proj(a1);
    const std::array<double, 2> ra{qa[0] - pa[0], qa[1] - pa[1]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Vec3 &b0 = b[j], &b1 = b[(j + 1) % b.size()];
      const auto pb = proj(b0), qb = proj(b1);
      const std::array<double, 2> rb{qb[0] - pb[0], qb[1] - pb[1]};
      const double den = ra[0] * rb[1] - ra[1] * rb[0];
      const std::array<double, 2> w{pb[0] - pa[0], pb[1] - pa[1]};
      const double scale = std::hypot(ra[0], ra[1]) * std::hypot(rb[0], rb[1]);
      if (std::abs(den) <= 1e-12 * scale) {
        // parallel: only a problem when also collinear and overlapping
        const double off = w[0] * ra[1] - w[1] * ra[0];
        if (std::abs(off) <= 1e-12 * std::max(scale, 1.0))
          out.generic = false;
        continue;
      }
      const double s = (w[0] * rb[1] - w[1] * rb[0]) / den;
      const double t = (w[0] * ra[1] - w[1] * ra[0]) / den;
      if (s < -kEdge || s > 1 + kEdge || t < -kEdge || t > 1 + kEdge)
        continue;
      if (std::abs(s) <= kEdge || std::abs(s - 1) <= kEdge || std::abs(t) <= kEdge ||
          std::abs(t - 1) <= kEdge) {
        out.generic = false;
        continue;
      }
      const Vec3 xa = a0 + s * (a1 - a0);
      const Vec3 xb = b0 + t * (b1 - b0);
      const double ha = xa.dot(d), hb = xb.dot(d);
      if (std::abs(ha - hb) < 1e-12) {
        out.generic = false; // the polygons meet
        continue;
      }
      const Vec3 da = a1 - a0, db = b1 - b0;
      if (ha > hb)
        out.a_over += da.cross(db).dot(d) > 0 ? 1 : -1;
      else
        out.b_over += db.cross(da).dot(d) > 0 ? 1 : -1;
    }
  }
  return out;
}

} // namespace

int linking_number(const Polygon &a, const Polygon &b) {
  static const std::array<Vec3, 5> dirs{Vec3(0.3107, 0.1947, 1.0), Vec3(-0.2213, 0.3371, 1.0),
                                        Vec3(0.1171, -0.4129, 1.0), Vec3(0.5031, 0.2719, 0.9),
                                        Vec3(-0.3793, -0.1531, 1.0)};
  for (const auto &raw : dirs) {
    const Crossings c = count_crossings(a, b, raw.normalized());
    if (!c.generic)
      continue;
    if (c.a_over != c.b_over)
      throw std::runtime_error("linking_number: crossing counts disagree");
    return c.a_over;
  }
  throw std::runtime_error("linking_number: no generic projection found");
}

} // namespace detail

IntegerMatrix seifert_matrix(const BraidWord &b) {
  if (!is_knot_closure(b))
    throw DomainError("seifert_matrix: closure is a link, not a knot (cycles " +
                      describe_cycles(permutation(b)) + ")");
  const auto sl = detail::seifert_loops(b);
  const std::size_t m = sl.loops.size();
  IntegerMatrix v(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      v(i, j) = detail::linking_number(sl.loops[i], sl.pushed[j]);
  return v;
}

} // namespace braidfix
