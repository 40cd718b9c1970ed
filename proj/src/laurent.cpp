#include "braidfix/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace braidfix {

LaurentPoly::LaurentPoly(const Rational &c) {
  if (c != 0)
    terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational &c, int exp) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

void LaurentPoly::add_term(int exp, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty())
    throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty())
    throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
  LaurentPoly r = *this;
  for (const auto &[e, c] : o.terms_)
    r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
  LaurentPoly r;
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : o.terms_)
      r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly &o) const {
  if (o.is_zero())
    throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly q;
  const int od = o.max_exp();
  const Rational lead = o.coeff(od);
  const int olow = o.min_exp();
  // long division from the top; the quotient's lowest exponent is bounded by
  // min_exp(this) - min_exp(o), which bounds the loop
  while (!rem.is_zero()) {
    const int rd = rem.max_exp();
    if (rd - od < min_exp() - olow)
      throw std::domain_error("polynomial division is not exact");
    const LaurentPoly term = monomial(rem.coeff(rd) / lead, rd - od);
    q += term;
    rem -= term * o;
  }
  return q;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::reflect() const {
  LaurentPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_[-e] = c;
  return r;
}

Rational LaurentPoly::eval(const Rational &t) const {
  if (t == 0 && !terms_.empty() && min_exp() < 0)
    throw std::domain_error("negative power evaluated at 0");
  Rational s = 0;
  for (const auto &[e, c] : terms_) {
    Rational p = 1;
    const int m = e < 0 ? -e : e;
    for (int i = 0; i < m; ++i)
      p *= t;
    if (e < 0)
      s += c / p;
    else
      s += c * p;
  }
  return s;
}

LaurentPoly LaurentPoly::normalized_symmetric() const {
  if (is_zero())
    return {};
  const int span = max_exp() - min_exp();
  if (span % 2 != 0)
    throw std::domain_error("polynomial of odd span cannot be centered");
  LaurentPoly r = shift(-(min_exp() + span / 2));
  const Rational at1 = r.eval(1);
  if (at1 < 0 || (at1 == 0 && r.coeff(r.max_exp()) < 0))
    r = -r;
  return r;
}

std::vector<Rational> LaurentPoly::dense() const {
  std::vector<Rational> out;
  if (is_zero())
    return out;
  for (int e = min_exp(); e <= max_exp(); ++e)
    out.push_back(coeff(e));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0 || mag != 1)
      os << mag;
    if (e != 0) {
      os << "t";
      if (e != 1)
        os << "^" << e;
    }
  }
  return os.str();
}

bool equal_up_to_unit(const LaurentPoly &p, const LaurentPoly &q) {
  if (p.is_zero() || q.is_zero())
    return p.is_zero() && q.is_zero();
  const LaurentPoly ps = p.shift(-p.min_exp());
  const LaurentPoly qs = q.shift(-q.min_exp());
  return ps == qs || ps == -qs;
}

PolyMatrix poly_identity(std::size_t n) {
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

PolyMatrix poly_multiply(const PolyMatrix &a, const PolyMatrix &b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  PolyMatrix r(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k)
      throw std::invalid_argument("poly_multiply: shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero())
        continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero())
          r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

LaurentPoly poly_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw std::invalid_argument("poly_determinant: matrix is not square");
  if (n == 0)
    return 1;
  LaurentPoly prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace braidfix
