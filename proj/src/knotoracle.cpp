#include "braidfix/knotoracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidfix {

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntegerMatrix: shape mismatch");
  IntegerMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    s.data_[i] += o.data_[i];
  return s;
}

namespace {

const LaurentPoly kT = LaurentPoly::t();
const LaurentPoly kTinv = LaurentPoly::monomial(1, -1);

PolyMatrix burau_letter(int n, int letter) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  PolyMatrix g = poly_identity(m);
  const int i = std::abs(letter);
  const bool pos = letter > 0;
  if (n == 2) {
    g[0][0] = pos ? -kT : -kTinv;
    return g;
  }
  // row i-1 (0-based) carries the nontrivial entries
  const std::size_t r = static_cast<std::size_t>(i - 1);
  if (pos) {
    if (r > 0)
      g[r][r - 1] = kT;
    g[r][r] = -kT;
    if (r + 1 < m)
      g[r][r + 1] = 1;
  } else {
    if (r > 0)
      g[r][r - 1] = 1;
    g[r][r] = -kTinv;
    if (r + 1 < m)
      g[r][r + 1] = kTinv;
  }
  return g;
}

void require_knot(const BraidWord &b, const char *what) {
  if (!is_knot_closure(b))
    throw DomainError(std::string(what) + ": closure is a link, not a knot (cycles " +
                      describe_cycles(permutation(b)) + ")");
}

} // namespace

PolyMatrix burau_reduced(const BraidWord &b) {
  if (b.strands() < 2)
    throw DomainError("burau_reduced: need at least 2 strands");
  PolyMatrix m = poly_identity(static_cast<std::size_t>(b.strands() - 1));
  for (int g : b.letters())
    m = poly_multiply(m, burau_letter(b.strands(), g));
  return m;
}

LaurentPoly alexander(const BraidWord &b) {
  require_knot(b, "alexander");
  if (b.strands() == 1)
    return 1;
  PolyMatrix m = burau_reduced(b);
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][i] -= 1;
  LaurentPoly num = poly_determinant(std::move(m)) * (LaurentPoly(1) - kT);
  LaurentPoly den = LaurentPoly(1) - LaurentPoly::monomial(1, b.strands());
  return num.divide_exact(den).normalized_symmetric();
}

std::int64_t determinant(const BraidWord &b) {
  const Rational v = alexander(b).eval(-1);
  if (denominator(v) != 1)
    throw std::logic_error("determinant: non-integral Alexander value");
  const BigInt d = abs(numerator(v));
  return d.convert_to<std::int64_t>();
}

namespace {

std::vector<std::vector<Rational>> to_rational(const IntegerMatrix &m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j);
  return a;
}

} // namespace

int symmetric_signature(const IntegerMatrix &m) {
  if (m.rows() != m.cols() || !(m == m.transpose()))
    throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
  auto a = to_rational(m);
  const std::size_t n = a.size();
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // bring a nonzero diagonal entry to position k
    std::size_t p = k;
    while (p < n && a[p][p] == 0)
      ++p;
    if (p == n) {
      std::size_t r = k, c = n;
      for (; r < n && c == n; ++r)
        for (std::size_t j = r + 1; j < n; ++j)
          if (a[r][j] != 0) {
            c = j;
            break;
          }
      if (c == n)
        break; // remaining block is zero
      --r;
      // e_r + e_c has form value 2 a[r][c] != 0
      for (std::size_t j = 0; j < n; ++j)
        a[r][j] += a[c][j];
      for (std::size_t j = 0; j < n; ++j)
        a[j][r] += a[j][c];
      p = r;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto &row : a)
        std::swap(row[p], row[k]);
    }
    const Rational piv = a[k][k];
    sig += piv > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0)
        continue;
      const Rational f = a[i][k] / piv;
      for (std::size_t j = k; j < n; ++j)
        a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j)
        a[j][i] = a[i][j];
    }
  }
  return sig;
}

BigInt integer_determinant(const IntegerMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("integer_determinant: matrix is not square");
  auto a = to_rational(m);
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j)
        a[i][j] -= f * a[k][j];
    }
  }
  return numerator(det);
}

int signature(const BraidWord &b) {
  const IntegerMatrix v = seifert_matrix(b);
  return symmetric_signature(v + v.transpose());
}

LaurentPoly seifert_alexander(const IntegerMatrix &v) {
  const std::size_t n = v.rows();
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly(static_cast<int>(v(i, j))) -
                LaurentPoly::monomial(static_cast<int>(v(j, i)), 1);
  return poly_determinant(std::move(m));
}

int binary_dihedral_count(const BraidWord &b) {
  const std::int64_t d = determinant(b);
  if (d % 2 == 0)
    throw std::logic_error("binary_dihedral_count: even determinant for a knot");
  return static_cast<int>((d - 1) / 2);
}

} // namespace braidfix
