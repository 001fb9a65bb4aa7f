#include "polydisc/linalg.hpp"

#include <utility>

#include "polydisc/errors.hpp"

namespace polydisc {

Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant: matrix is not square");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

namespace {

// In-place elimination; returns rank and fills det when the matrix is square.
std::size_t eliminate(RatMatrix& a, Rational* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      d = -d;
    }
    d *= a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? d : Rational(0);
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  RatMatrix a = m;
  Rational d;
  eliminate(a, &d);
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return eliminate(a, nullptr);
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse: matrix is not square");
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw DomainError("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    Rational inv = 1 / a(c, c);
    for (std::size_t j = c; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

namespace {

void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  // row[dst] -= q * row[src]
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(src, j) != 0) a(dst, j) -= q * a(src, j);
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix a = rows;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (best == m || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best == m) throw DomainError("hermite_normal_form: rows do not have full column rank");
      if (best != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(a(best, j), a(r, j));
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        row_axpy(a, i, r, q);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      row_axpy(a, i, r, q);
    }
    ++r;
  }
  IntMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = a(i, j);
  return h;
}

std::vector<Rational> interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t m = x.size();
  if (y.size() != m) throw DomainError("interpolate: size mismatch");
  std::vector<Rational> dd = y;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      Rational den = x[i] - x[i - j];
      if (den == 0) throw DomainError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  // Horner on the Newton form
  std::vector<Rational> c(m, Rational(0));
  for (std::size_t k = m; k-- > 0;) {
    // c <- c * (X - x[k]) + dd[k]
    std::vector<Rational> nc(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      if (i + 1 < m) nc[i + 1] += c[i];
      nc[i] -= c[i] * x[k];
    }
    nc[0] += dd[k];
    c = std::move(nc);
  }
  return c;
}

}  // namespace polydisc
