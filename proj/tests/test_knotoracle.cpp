#include "doctest.h"
#include "support.hpp"

#include "braidfix/knotoracle.hpp"

using namespace braidfix;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);

// knot braids with their expected signature and determinant
struct Known {
  const char *word;
  int signature;
  std::int64_t determinant;
};

const Known kKnown[] = {
    {"1 1 1", -2, 3},          {"-1 -1 -1", 2, 3},     {"1 -2 1 -2", 0, 5},
    {"1 1 1 1 1", -4, 5},      {"1 1 1 1 1 1 1", -6, 7}, {"1 1 1 2 -1 2", -2, 7},
    {"1 1 2 -1 -3 2 -3", 0, 9}, {"1 2 1 2 1 2 1 2", -6, 3}, {"1 1 1 -2 1 1 2 2", -4, 17},
};

LaurentPoly det_lk_alexander(const BraidWord &b) {
  return seifert_alexander(seifert_matrix(b));
}

} // namespace

TEST_CASE("LaurentPoly arithmetic") {
  const LaurentPoly p = t - 1 + t_inv;
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 1);
  CHECK(p.coeff(0) == -1);
  CHECK((p * p).coeff(0) == 3);
  CHECK((p - p).is_zero());
  CHECK(p.eval(-1) == -3);
  CHECK((p * (t + 2)).divide_exact(t + 2) == p);
  CHECK_THROWS_AS((t + 3).divide_exact(t + 2), std::domain_error);
  CHECK(p.reflect() == p);
  CHECK(p.shift(2).normalized_symmetric() == p);
  CHECK((-p).normalized_symmetric() == p);
  CHECK(equal_up_to_unit(-p.shift(3), p));
  CHECK_FALSE(equal_up_to_unit(p + 1, p));
}

TEST_CASE("burau_reduced generators") {
  const auto s = burau_reduced(parse_braid("1"));
  REQUIRE(s.size() == 1);
  CHECK(s[0][0] == -t);
  CHECK(burau_reduced(parse_braid("-1"))[0][0] == -t_inv);
  CHECK(burau_reduced(BraidWord(3, {})) == poly_identity(2));
  CHECK(burau_reduced(parse_braid("1 -1 2 -2")) == poly_identity(2));
}

TEST_CASE("property: burau_reduced is a homomorphism and respects braid relations") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const auto a = support::random_braid(rng, n, 6);
    const auto b = support::random_braid(rng, n, 6);
    CHECK(burau_reduced(concat(a, b)) == poly_multiply(burau_reduced(a), burau_reduced(b)));
    if (n >= 3) {
      std::uniform_int_distribution<int> col(1, n - 2);
      const int i = col(rng);
      CHECK(burau_reduced(BraidWord(n, {i, i + 1, i})) ==
            burau_reduced(BraidWord(n, {i + 1, i, i + 1})));
    }
  }
}

TEST_CASE("alexander of small knots") {
  CHECK(alexander(parse_braid("1")) == LaurentPoly(1));
  CHECK(alexander(parse_braid("1 1 1")) == t - 1 + t_inv);
  CHECK(equal_up_to_unit(alexander(parse_braid("1 -2 1 -2")), -t + 3 - t_inv));
  CHECK(alexander(parse_braid("", 1)) == LaurentPoly(1));
  CHECK_THROWS_AS(alexander(parse_braid("1 1")), DomainError);
}

TEST_CASE("determinant and binary dihedral count") {
  CHECK(determinant(parse_braid("1")) == 1);
  CHECK(determinant(parse_braid("1 1 1")) == 3);
  CHECK(determinant(parse_braid("1 -2 1 -2")) == 5);
  CHECK(binary_dihedral_count(parse_braid("1")) == 0);
  CHECK(binary_dihedral_count(parse_braid("1 1 1")) == 1);
  CHECK(binary_dihedral_count(parse_braid("1 -2 1 -2")) == 2);
}

TEST_CASE("seifert_matrix of small knots") {
  CHECK(seifert_matrix(parse_braid("1")).rows() == 0);
  const auto v = seifert_matrix(parse_braid("1 1 1"));
  REQUIRE(v.rows() == 2);
  CHECK(abs(integer_determinant(v + v.transpose())) == 3);
  CHECK(symmetric_signature(v + v.transpose()) == -2);
  const auto f = seifert_matrix(parse_braid("1 -2 1 -2"));
  REQUIRE(f.rows() == 2);
  CHECK(abs(integer_determinant(f + f.transpose())) == 5);
  CHECK(symmetric_signature(f + f.transpose()) == 0);
  CHECK_THROWS_AS(seifert_matrix(parse_braid("1 1 1", 3)), DomainError);
  CHECK_THROWS_AS(seifert_matrix(parse_braid("1 1")), DomainError);
}

TEST_CASE("signature and determinant of the reference knots") {
  for (const auto &k : kKnown) {
    CAPTURE(k.word);
    const auto b = parse_braid(k.word);
    CHECK(signature(b) == k.signature);
    CHECK(determinant(b) == k.determinant);
    const auto v = seifert_matrix(b);
    CHECK(v.rows() == b.length() - static_cast<std::size_t>(b.strands()) + 1);
    CHECK(abs(integer_determinant(v + v.transpose())) == k.determinant);
    CHECK(equal_up_to_unit(det_lk_alexander(b), alexander(b)));
    CHECK(equal_up_to_unit(support::fox_alexander(b), alexander(b)));
  }
}

TEST_CASE("symmetric_signature on explicit matrices") {
  IntegerMatrix m(3, 3);
  m(0, 0) = 0;
  m(0, 1) = m(1, 0) = 1;
  m(2, 2) = -4;
  CHECK(symmetric_signature(m) == -1);
  CHECK(integer_determinant(m) == 4);
  IntegerMatrix bad(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS(symmetric_signature(bad));
}

TEST_CASE("property: oracle paths agree on random knot braids") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const auto b = support::random_knot_braid(rng, n, 9);
    CAPTURE(format_braid(b));
    const auto a = alexander(b);
    CHECK(a.reflect() == a);
    CHECK(abs(a.eval(1)) == 1);
    CHECK(equal_up_to_unit(support::fox_alexander(b), a));
    const auto v = seifert_matrix(b);
    CHECK(equal_up_to_unit(seifert_alexander(v), a));
    CHECK(abs(integer_determinant(v + v.transpose())) == determinant(b));
    const int s = signature(b);
    CHECK(s % 2 == 0);
    CHECK(signature(mirror(b)) == -s);
  }
}

TEST_CASE("property: alexander is invariant under both Markov moves") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 3;
    const auto b = support::random_knot_braid(rng, n, 8);
    const auto xi = support::random_braid(rng, n, 4);
    CAPTURE(format_braid(b));
    const auto a = alexander(b);
    CHECK(equal_up_to_unit(alexander(markov_conjugate(b, xi)), a));
    CHECK(equal_up_to_unit(alexander(markov_stabilize(b, 1)), a));
    CHECK(equal_up_to_unit(alexander(markov_stabilize(b, -1)), a));
    CHECK(signature(markov_stabilize(b, 1)) == signature(b));
  }
}

TEST_CASE("linking_number against the Gauss integral") {
  const Vec3 ex(1, 0, 0), ey(0, 1, 0), ez(0, 0, 1);
  const auto a = support::circle(Vec3::Zero(), ex, ey, 1.0);
  const auto b = support::circle(Vec3(1, 0, 0), ex, ez, 1.0);
  const int lk = detail::linking_number(a, b);
  CHECK(std::abs(lk) == 1);
  CHECK(std::abs(support::gauss_linking(a, b) - lk) < 1e-6);
  std::vector<Vec3> rev(b.rbegin(), b.rend());
  CHECK(detail::linking_number(a, rev) == -lk);
  const auto far = support::circle(Vec3(5, 0, 0), ex, ez, 1.0);
  CHECK(detail::linking_number(a, far) == 0);
}

TEST_CASE("property: Seifert linking numbers match the Gauss integral") {
  std::mt19937_64 rng(54);
  int pairs = 0;
  for (int k = 0; k < 30; ++k) {
    const auto b = support::random_knot_braid(rng, 2 + k % 3, 7);
    const auto sl = detail::seifert_loops(b);
    const auto v = seifert_matrix(b);
    for (std::size_t i = 0; i < sl.loops.size(); ++i)
      for (std::size_t j = 0; j < sl.loops.size(); ++j) {
        const double g = support::gauss_linking(sl.loops[i], sl.pushed[j]);
        CHECK(std::abs(g - static_cast<double>(v(i, j))) < 1e-6);
        ++pairs;
      }
  }
  CHECK(pairs >= 100);
}
