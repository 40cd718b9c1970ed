#include "doctest.h"
#include "support.hpp"

#include "braidfix/repvariety.hpp"

#include <numbers>

using namespace braidfix;

namespace {

double max_diff(const std::vector<Vec3> &a, const std::vector<Vec3> &b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, (a[i] - b[i]).norm());
  return m;
}

} // namespace

TEST_CASE("hurwitz on a single letter") {
  const auto c = Configuration::from_vectors(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}});
  const auto s = hurwitz(parse_braid("1"), c);
  CHECK((s[0].vec() - Vec3(0, -1, 0)).norm() < 1e-15);
  CHECK((s[1].vec() - Vec3(1, 0, 0)).norm() < 1e-15);
  const auto back = hurwitz(parse_braid("-1"), s);
  CHECK(config_distance(back, c) < 1e-15);
}

TEST_CASE("property: hurwitz matches full quaternion products") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const auto b = support::random_braid(rng, n, 10);
    std::vector<Quaternion> qs;
    for (const auto &e : c.elems())
      qs.push_back(e.quaternion());
    const auto ref = support::quaternion_hurwitz(b, qs);
    const auto got = hurwitz(b, c);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(ref[static_cast<std::size_t>(i)].w) < 1e-12);
      CHECK((ref[static_cast<std::size_t>(i)].vec() - got[static_cast<std::size_t>(i)].vec()).norm() <
            1e-12);
    }
  }
}

TEST_CASE("property: hurwitz respects the braid relations") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + k % 4;
    const auto c = support::random_config(rng, n);
    std::uniform_int_distribution<int> col(1, n - 2);
    const int i = col(rng);
    const auto lhs = hurwitz(BraidWord(n, {i, i + 1, i}), c);
    const auto rhs = hurwitz(BraidWord(n, {i + 1, i, i + 1}), c);
    CHECK(config_distance(lhs, rhs) < 1e-12);
    if (i + 2 < n) {
      CHECK(config_distance(hurwitz(BraidWord(n, {i, i + 2}), c),
                            hurwitz(BraidWord(n, {i + 2, i}), c)) < 1e-12);
    }
    CHECK(config_distance(hurwitz(BraidWord(n, {i, -i}), c), c) < 1e-12);
  }
}

TEST_CASE("property: hurwitz preserves the product") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const auto b = support::random_braid(rng, n, 12);
    CHECK(max_abs_diff(product(hurwitz(b, c)), product(c)) < 1e-12);
  }
}

TEST_CASE("property: hurwitz commutes with gauge") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const auto b = support::random_braid(rng, n, 10);
    const Quaternion g = support::random_rotation(rng);
    CHECK(config_distance(hurwitz(b, conj_action(g, c)), conj_action(g, hurwitz(b, c))) < 1e-12);
  }
}

TEST_CASE("property: hurwitz preserves reducibility") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const auto b = support::random_braid(rng, n, 8);
    // all vectors on one axis
    const Vec3 axis = support::random_unit(rng);
    std::vector<Vec3> vs;
    for (int i = 0; i < n; ++i)
      vs.push_back(rng() % 2 ? axis : Vec3(-axis));
    const auto red = Configuration::from_vectors(vs);
    CHECK_FALSE(is_irreducible(hurwitz(b, red)));
    const auto irr = support::random_config(rng, n);
    CHECK(is_irreducible(irr));
    CHECK(is_irreducible(hurwitz(b, irr)));
  }
}

TEST_CASE("gauge slice pins the first vector and planarizes the pivot") {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const GaugeFix gf = gauge_fix(c);
    CHECK(gf.slice.params.size() == static_cast<std::size_t>(2 * n - 3));
    const auto d = decode(gf.slice);
    CHECK((d[0].vec() - Vec3(1, 0, 0)).norm() < 1e-12);
    const Vec3 &p = d[static_cast<std::size_t>(gf.slice.pivot)].vec();
    CHECK(std::abs(p.z()) < 1e-12);
    CHECK(p.y() >= -1e-12);
    CHECK(config_distance(conj_action(gf.g, c), d) < 1e-10);
    CHECK(config_distance(canonical(d), d) < 1e-10);
  }
}

TEST_CASE("gauge slice skips a pivot collinear with the first vector") {
  const auto c =
      Configuration::from_vectors(std::vector<Vec3>{{0, 0, 1}, {0, 0, -1}, {0, 1, 0}});
  const GaugeFix gf = gauge_fix(c);
  CHECK(gf.slice.pivot == 2);
  CHECK(config_distance(decode(gf.slice), conj_action(gf.g, c)) < 1e-12);
  const auto red = Configuration::from_vectors(std::vector<Vec3>{{0, 0, 1}, {0, 0, -1}});
  CHECK_FALSE(is_irreducible(red));
  CHECK_THROWS_AS(gauge_fix(red), DomainError);
}

TEST_CASE("property: canonical representative is gauge invariant") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const Quaternion g = support::random_rotation(rng);
    CHECK(max_diff(support::vecs(canonical(c)), support::vecs(canonical(conj_action(g, c)))) <
          1e-9);
  }
}

TEST_CASE("property: fingerprint is invariant under conjugation") {
  std::mt19937_64 rng(28);
  for (int k = 0; k < 150; ++k) {
    const int n = 2 + k % 5;
    const auto c = support::random_config(rng, n);
    const Quaternion g = support::random_rotation(rng);
    CHECK(fingerprint_distance(fingerprint(c), fingerprint(conj_action(g, c))) < 1e-12);
  }
}

TEST_CASE("property: fingerprint separates non-conjugate configurations") {
  std::mt19937_64 rng(29);
  int tested = 0;
  while (tested < 100) {
    const int n = 2 + tested % 4;
    const auto a = support::random_config(rng, n);
    auto b = support::random_config(rng, n);
    if (tested % 3 == 0 && n >= 3) {
      // mirror image: same dot products, opposite chirality (for n = 2 the
      // mirror is conjugate, so only n >= 3 is useful)
      std::vector<Vec3> vs = support::vecs(a);
      for (auto &v : vs)
        v.z() = -v.z();
      b = Configuration::from_vectors(vs);
    }
    if (align(a.elems(), b.elems()).d <= 1e-3)
      continue;
    CHECK(fingerprint_distance(fingerprint(a), fingerprint(b)) > 1e-6);
    ++tested;
  }
}

TEST_CASE("fingerprint keeps chirality when the first two vectors are collinear") {
  const std::vector<Vec3> a{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0.6, 0.8}};
  std::vector<Vec3> b = a;
  b[3].z() = -0.8;
  const auto ca = Configuration::from_vectors(a), cb = Configuration::from_vectors(b);
  CHECK(align(ca.elems(), cb.elems()).d > 1e-3);
  CHECK(fingerprint_distance(fingerprint(ca), fingerprint(cb)) > 1e-6);
}

TEST_CASE("fixed_point_residual of the trefoil class") {
  // coplanar pair at angle 2 pi / 3 is an exact fixed point of sigma_1^3
  const double a = 2 * std::numbers::pi / 3;
  const auto c = Configuration::from_vectors(
      std::vector<Vec3>{{1, 0, 0}, {std::cos(a), std::sin(a), 0}});
  CHECK(fixed_point_residual(parse_braid("1 1 1"), c) < 1e-14);
  CHECK(fixed_point_residual(parse_braid("1"), c) > 0.1);
}

TEST_CASE("HPoint product constraint via hurwitz") {
  std::mt19937_64 rng(30);
  for (int k = 0; k < 20; ++k) {
    const auto x = support::random_config(rng, 3);
    const HPoint h{x, hurwitz(support::random_braid(rng, 3, 6), x)};
    CHECK(max_abs_diff(product(h.x), product(h.y)) < 1e-12);
  }
}
