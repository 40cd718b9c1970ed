#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace braidfix {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in t with rational coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational &c); // NOLINT: constant polynomial
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {} // NOLINT
  static LaurentPoly monomial(const Rational &c, int exp);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, Rational> &terms() const noexcept { return terms_; }
  Rational coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator+(const LaurentPoly &o) const;
  LaurentPoly operator-(const LaurentPoly &o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly &o) const;
  LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
  LaurentPoly &operator-=(const LaurentPoly &o) { return *this = *this - o; }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  /// Exact quotient; throws std::domain_error when o does not divide this.
  LaurentPoly divide_exact(const LaurentPoly &o) const;

  /// Multiply by t^k.
  LaurentPoly shift(int k) const;
  /// p(t^-1)
  LaurentPoly reflect() const;
  Rational eval(const Rational &t) const;

  /// Shift so exponents are balanced around 0 and scale so p(1) > 0.
  LaurentPoly normalized_symmetric() const;

  /// Coefficients from min_exp() to max_exp(), zeros included.
  std::vector<Rational> dense() const;
  std::string to_string() const;

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  void add_term(int exp, const Rational &c);
  std::map<int, Rational> terms_;
};

/// p == +-t^k q for some k.
bool equal_up_to_unit(const LaurentPoly &p, const LaurentPoly &q);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix poly_identity(std::size_t n);
PolyMatrix poly_multiply(const PolyMatrix &a, const PolyMatrix &b);
/// Fraction-free Bareiss elimination with exact division.
LaurentPoly poly_determinant(PolyMatrix m);

} // namespace braidfix
