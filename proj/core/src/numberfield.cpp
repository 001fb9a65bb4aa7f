#include "polydisc/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polydisc/errors.hpp"
#include "polydisc/factor.hpp"

namespace polydisc {

namespace {

std::vector<Rational> zeros(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)); }

Integer lcm_den(const std::vector<Rational>& v, Integer acc = 1) {
  for (const auto& q : v) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t());
  return acc;
}

}  // namespace

NumberField::NumberField(const IntPoly& f) : f_(f) {
  if (f_.degree() < 1) throw DomainError("NumberField: degree must be at least 1");
  if (f_.leading() < 0) f_ = -f_;
  if (content(f_) != 1) throw DomainError("NumberField: defining polynomial is not primitive");
  if (!is_irreducible(f_)) throw DomainError("NumberField: defining polynomial is reducible");
  n_ = f_.degree();
  powers_.assign(static_cast<std::size_t>(2 * n_ - 1), zeros(n_));
  for (int k = 0; k < n_; ++k) powers_[k][k] = 1;
  Rational lead(f_.leading());
  for (int k = n_; k < 2 * n_ - 1; ++k) {
    const auto& prev = powers_[k - 1];
    auto& cur = powers_[k];
    Rational top = prev[n_ - 1];
    for (int i = n_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < n_; ++i) cur[i] -= top * Rational(f_[i]) / lead;
  }
}

bool NFElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

NFElement nf_from_rational(const NumberField& K, const Rational& x) {
  NFElement e{zeros(K.degree())};
  e.coords[0] = x;
  return e;
}

NFElement nf_generator(const NumberField& K) {
  if (K.degree() == 1) {
    Rational a(-K.poly()[0], K.poly()[1]);
    a.canonicalize();
    return nf_from_rational(K, a);
  }
  NFElement e{zeros(K.degree())};
  e.coords[1] = 1;
  return e;
}

NFElement nf_from_poly(const NumberField& K, const std::vector<Rational>& ascending) {
  const int n = K.degree();
  NFElement e{zeros(n)};
  std::vector<Rational> acc(ascending.begin(), ascending.end());
  // fold powers beyond 2n-2 down by repeated multiplication
  while (static_cast<int>(acc.size()) > 2 * n - 1) {
    int top = static_cast<int>(acc.size()) - 1;
    Rational c = acc[top];
    acc.pop_back();
    if (c == 0) continue;
    // alpha^top = alpha^(top-n) * alpha^n
    const auto& an = K.power(n);
    for (int i = 0; i < n; ++i) acc[top - n + i] += c * an[i];
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    const auto& p = K.power(static_cast<int>(k));
    for (int i = 0; i < n; ++i)
      if (p[i] != 0) e.coords[i] += acc[k] * p[i];
  }
  return e;
}

NFElement nf_add(const NFElement& x, const NFElement& y) {
  NFElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

NFElement nf_sub(const NFElement& x, const NFElement& y) {
  NFElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
  return r;
}

NFElement nf_neg(const NFElement& x) { return nf_scale(x, Rational(-1)); }

NFElement nf_scale(const NFElement& x, const Rational& c) {
  NFElement r = x;
  for (auto& q : r.coords) q *= c;
  return r;
}

NFElement nf_mul(const NumberField& K, const NFElement& x, const NFElement& y) {
  const int n = K.degree();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * n - 1), Rational(0));
  for (int i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (y.coords[j] != 0) prod[i + j] += x.coords[i] * y.coords[j];
  }
  return nf_from_poly(K, prod);
}

NFElement nf_pow(const NumberField& K, const NFElement& x, unsigned k) {
  NFElement r = nf_from_rational(K, 1), b = x;
  while (k) {
    if (k & 1U) r = nf_mul(K, r, b);
    k >>= 1U;
    if (k) b = nf_mul(K, b, b);
  }
  return r;
}

RatMatrix mult_matrix(const NumberField& K, const NFElement& x) {
  const int n = K.degree();
  RatMatrix m(n, n);
  NFElement row = x;
  NFElement a = nf_generator(K);
  for (int i = 0; i < n; ++i) {
    m.set_row(i, row.coords);
    if (i + 1 < n) row = nf_mul(K, row, a);
  }
  return m;
}

NFElement nf_inv(const NumberField& K, const NFElement& x) {
  if (x.is_zero()) throw DomainError("nf_inv: inverse of zero");
  RatMatrix inv = inverse(mult_matrix(K, x));
  return NFElement{inv.row(0)};
}

Rational nf_norm(const NumberField& K, const NFElement& x) { return determinant(mult_matrix(K, x)); }

Rational nf_trace(const NumberField& K, const NFElement& x) {
  RatMatrix m = mult_matrix(K, x);
  Rational t = 0;
  for (int i = 0; i < K.degree(); ++i) t += m(i, i);
  return t;
}

std::vector<Rational> nf_charpoly(const NumberField& K, const NFElement& x) {
  // Faddeev-LeVerrier
  const int n = K.degree();
  RatMatrix a = mult_matrix(K, x);
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  c[n] = 1;
  RatMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    RatMatrix prod = a * mk;
    for (int i = 0; i < n; ++i) prod(i, i) += c[n - k + 1];
    mk = prod;
    RatMatrix am = a * mk;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

NFElement nf_eval(const NumberField& K, const IntPoly& g, const NFElement& x) {
  NFElement r = nf_from_rational(K, 0);
  for (int k = g.degree(); k >= 0; --k) {
    r = nf_mul(K, r, x);
    r.coords[0] += g[k];
  }
  return r;
}

std::string to_string(const NFElement& x) {
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(x.coords.size()) - 1; k >= 0; --k) {
    const Rational& c = x.coords[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (k == 0 || !unit) out << a.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << "a";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------

NFElement ZModuleInK::element(int i) const {
  const int n = rank();
  NFElement e{zeros(n)};
  for (int j = 0; j < n; ++j) e.coords[j] = Rational(basis(i, j), denom);
  for (auto& q : e.coords) q.canonicalize();
  return e;
}

std::vector<NFElement> ZModuleInK::elements() const {
  std::vector<NFElement> out;
  for (int i = 0; i < rank(); ++i) out.push_back(element(i));
  return out;
}

namespace {

ZModuleInK module_from_rows(int n, const std::vector<std::vector<Rational>>& gens) {
  if (gens.empty()) throw DomainError("module_from_generators: no generators");
  Integer L = 1;
  for (const auto& g : gens) L = lcm_den(g, L);
  IntMatrix rows(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int j = 0; j < n; ++j) {
      Rational v = gens[r][j] * L;
      rows(r, n - 1 - j) = v.get_num();
    }
  IntMatrix h = hermite_normal_form(rows);
  ZModuleInK M;
  M.basis = IntMatrix(n, n);
  Integer g = L;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M.basis(i, j) = h(n - 1 - i, n - 1 - j);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M.basis(i, j).get_mpz_t());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_divexact(M.basis(i, j).get_mpz_t(), M.basis(i, j).get_mpz_t(), g.get_mpz_t());
  M.denom = L / g;
  return M;
}

RatMatrix rational_basis(const ZModuleInK& M) {
  const int n = M.rank();
  RatMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b(i, j) = Rational(M.basis(i, j), M.denom);
      b(i, j).canonicalize();
    }
  return b;
}

ZModuleInK dual(const ZModuleInK& M) {
  const int n = M.rank();
  RatMatrix d = inverse(rational_basis(M)).transpose();
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(d.row(i));
  return module_from_rows(n, rows);
}

}  // namespace

ZModuleInK module_from_generators(const NumberField& K, const std::vector<NFElement>& gens) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) rows.push_back(g.coords);
  return module_from_rows(K.degree(), rows);
}

bool module_contains(const ZModuleInK& M, const NFElement& x) {
  const int n = M.rank();
  std::vector<Integer> v(n);
  for (int j = 0; j < n; ++j) {
    Rational q = x.coords[j] * M.denom;
    if (q.get_den() != 1) return false;
    v[j] = q.get_num();
  }
  for (int i = n - 1; i >= 0; --i) {
    if (v[i] == 0) continue;
    const Integer& p = M.basis(i, i);
    if (!mpz_divisible_p(v[i].get_mpz_t(), p.get_mpz_t())) return false;
    Integer c = v[i] / p;
    for (int j = 0; j <= i; ++j) v[j] -= c * M.basis(i, j);
  }
  return true;
}

bool module_contains(const ZModuleInK& M, const ZModuleInK& N) {
  for (const auto& e : N.elements())
    if (!module_contains(M, e)) return false;
  return true;
}

ZModuleInK module_sum(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N) {
  auto g = M.elements();
  auto h = N.elements();
  g.insert(g.end(), h.begin(), h.end());
  return module_from_generators(K, g);
}

ZModuleInK module_product(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N) {
  std::vector<NFElement> g;
  auto a = M.elements();
  auto b = N.elements();
  for (const auto& x : a)
    for (const auto& y : b) g.push_back(nf_mul(K, x, y));
  return module_from_generators(K, g);
}

ZModuleInK module_scale(const NumberField& K, const ZModuleInK& M, const NFElement& x) {
  std::vector<NFElement> g;
  for (const auto& e : M.elements()) g.push_back(nf_mul(K, e, x));
  return module_from_generators(K, g);
}

ZModuleInK module_intersection(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N) {
  return dual(module_sum(K, dual(M), dual(N)));
}

ZModuleInK module_colon(const NumberField& K, const ZModuleInK& M, const ZModuleInK& N) {
  auto gens = N.elements();
  ZModuleInK acc = module_scale(K, M, nf_inv(K, gens[0]));
  for (std::size_t i = 1; i < gens.size(); ++i)
    acc = module_intersection(K, acc, module_scale(K, M, nf_inv(K, gens[i])));
  return acc;
}

Rational module_volume(const ZModuleInK& M) {
  Integer d = 1;
  for (int i = 0; i < M.rank(); ++i) d *= M.basis(i, i);
  Integer dn;
  mpz_pow_ui(dn.get_mpz_t(), M.denom.get_mpz_t(), static_cast<unsigned long>(M.rank()));
  Rational v(d, dn);
  v.canonicalize();
  return v;
}

std::string to_string(const ZModuleInK& M) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < M.rank(); ++i) {
    if (i) out << ",";
    out << "[";
    for (int j = 0; j < M.rank(); ++j) {
      if (j) out << ",";
      out << M.basis(i, j).get_str();
    }
    out << "]";
  }
  out << "]/" << M.denom.get_str();
  return out.str();
}

ZModuleInK power_module(const NumberField& K, const NFElement& x) {
  std::vector<NFElement> g;
  NFElement p = nf_from_rational(K, 1);
  for (int i = 0; i < K.degree(); ++i) {
    g.push_back(p);
    p = nf_mul(K, p, x);
  }
  return module_from_generators(K, g);
}

// ---------------------------------------------------------------------------

Rational trace_form_discriminant(const NumberField& K, const std::vector<NFElement>& basis) {
  const int n = static_cast<int>(basis.size());
  RatMatrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      t(i, j) = nf_trace(K, nf_mul(K, basis[i], basis[j]));
      t(j, i) = t(i, j);
    }
  return determinant(t);
}

OrderModule make_order(const NumberField& K, const ZModuleInK& M) {
  if (!module_contains(M, nf_from_rational(K, 1))) throw DomainError("make_order: module does not contain 1");
  auto els = M.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j)
      if (!module_contains(M, nf_mul(K, els[i], els[j])))
        throw DomainError("make_order: module is not closed under multiplication");
  Rational d = trace_form_discriminant(K, els);
  if (d.get_den() != 1) throw InternalError("make_order: non-integral discriminant");
  return {M, els, d.get_num()};
}

ZModuleInK multiplier_ring(const NumberField& K, const ZModuleInK& M) { return module_colon(K, M, M); }

namespace {

using u64 = unsigned long long;

u64 mod_p(const Rational& q, unsigned long p) {
  if (q.get_den() != 1) throw InternalError("is_p_maximal: non-integral coordinate");
  return mpz_fdiv_ui(q.get_num_mpz_t(), p);
}

// Basis of {v : v * A = 0 mod p} for a square matrix A (rows indexed by v).
std::vector<std::vector<u64>> left_kernel_mod_p(std::vector<std::vector<u64>> a, unsigned long p) {
  const std::size_t n = a.size();
  // work on A^T: columns of A become rows
  std::vector<std::vector<u64>> t(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  auto mulmod = [p](u64 x, u64 y) { return static_cast<u64>(static_cast<unsigned __int128>(x) * y % p); };
  auto inv = [&](u64 x) {
    u64 r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && t[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(t[piv], t[row]);
    u64 iv = inv(t[row][c]);
    for (auto& x : t[row]) x = mulmod(x, iv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || t[r][c] == 0) continue;
      u64 f = t[r][c];
      for (std::size_t k = 0; k < n; ++k) t[r][k] = (t[r][k] + p - mulmod(f, t[row][k])) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::vector<u64>> kernel;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - t[r][free]) % p;
    kernel.push_back(v);
  }
  return kernel;
}

}  // namespace

bool is_p_maximal(const NumberField& K, const OrderModule& O, unsigned long p) {
  if (p < 2) throw DomainError("is_p_maximal: p must be prime");
  const int n = K.degree();
  auto basis = O.module.elements();
  RatMatrix binv = inverse(rational_basis(O.module));
  auto coords = [&](const NFElement& x) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[j] += x.coords[k] * binv(k, j);
    return c;
  };
  // structure constants mod p
  std::vector<std::vector<std::vector<u64>>> st(n, std::vector<std::vector<u64>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = coords(nf_mul(K, basis[i], basis[j]));
      for (int k = 0; k < n; ++k) st[i][j].push_back(mod_p(c[k], p));
    }
  auto mul = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
    std::vector<unsigned __int128> acc(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (!y[j]) continue;
        unsigned __int128 xy = static_cast<unsigned __int128>(x[i]) * y[j] % p;
        for (int k = 0; k < n; ++k) acc[k] = (acc[k] + xy * st[i][j][k]) % p;
      }
    }
    std::vector<u64> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) r[k] = static_cast<u64>(acc[k]);
    return r;
  };
  // q = p^j >= n
  Integer q = p;
  while (q < n) q *= p;
  std::vector<u64> one;
  for (const auto& c : coords(nf_from_rational(K, 1))) one.push_back(mod_p(c, p));
  std::vector<std::vector<u64>> images;
  for (int i = 0; i < n; ++i) {
    std::vector<u64> e(static_cast<std::size_t>(n), 0), r = one;
    e[i] = 1;
    Integer ex = q;
    std::vector<u64> b = e;
    while (ex > 0) {
      if (mpz_odd_p(ex.get_mpz_t())) r = mul(r, b);
      ex /= 2;
      if (ex > 0) b = mul(b, b);
    }
    images.push_back(r);
  }
  auto kernel = left_kernel_mod_p(images, p);
  std::vector<NFElement> gens;
  for (const auto& b : basis) gens.push_back(nf_scale(b, Rational(static_cast<long>(p))));
  for (const auto& v : kernel) {
    NFElement x = nf_from_rational(K, 0);
    for (int i = 0; i < n; ++i)
      if (v[i]) x = nf_add(x, nf_scale(basis[i], Rational(static_cast<unsigned long>(v[i]))));
    gens.push_back(x);
  }
  ZModuleInK radical = module_from_generators(K, gens);
  return module_colon(K, radical, radical) == O.module;
}

bool is_maximal_order(const NumberField& K, const OrderModule& O) {
  Integer d = abs(O.discriminant);
  if (d > Integer("1000000000000")) return false;
  unsigned long long m = d.get_ui();
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2 && !is_p_maximal(K, O, static_cast<unsigned long>(p))) return false;
  }
  return true;
}

OrderModule invariant_order_of(const NumberField& K, const IntPoly& g, const NFElement& x) {
  const int n = g.degree();
  if (n < 2) throw DomainError("invariant_order: degree must be at least 2");
  if (n != K.degree()) throw DomainError("invariant_order: degree does not match the field");
  std::vector<Integer> a = g.descending();
  std::vector<NFElement> powers{nf_from_rational(K, 1)};
  for (int i = 1; i < n; ++i) powers.push_back(nf_mul(K, powers.back(), x));
  std::vector<NFElement> w{powers[0]};
  for (int j = 2; j <= n; ++j) {
    NFElement e = nf_from_rational(K, 0);
    for (int i = 0; i <= j - 2; ++i) e = nf_add(e, nf_scale(powers[j - 1 - i], Rational(a[i])));
    w.push_back(e);
  }
  OrderModule O = make_order(K, module_from_generators(K, w));
  O.basis = w;
  if (O.discriminant != discriminant(g)) throw InternalError("invariant_order: discriminant differs from D(f)");
  return O;
}

OrderModule invariant_order(const NumberField& K) { return invariant_order_of(K, K.poly(), nf_generator(K)); }

FracIdeal unit_ideal(const OrderModule& O) { return {O.module, O}; }

FracIdeal invariant_ideal_of(const NumberField& K, const IntPoly& g, const NFElement& x) {
  OrderModule O = invariant_order_of(K, g, x);
  auto gens = O.module.elements();
  for (const auto& e : O.module.elements()) gens.push_back(nf_mul(K, e, x));
  FracIdeal I{module_from_generators(K, gens), O};
  try {
    ideal_inverse(K, I);
  } catch (const NotInvertible&) {
    throw InternalError("invariant_ideal: ideal is not invertible");
  }
  return I;
}

FracIdeal invariant_ideal(const NumberField& K) { return invariant_ideal_of(K, K.poly(), nf_generator(K)); }

FracIdeal principal_ideal(const NumberField& K, const OrderModule& O, const NFElement& x) {
  return {module_scale(K, O.module, x), O};
}

FracIdeal ideal_mul(const NumberField& K, const FracIdeal& I, const FracIdeal& J) {
  if (!(I.order.module == J.order.module)) throw DomainError("ideal_mul: ideals over different orders");
  return {module_product(K, I.module, J.module), I.order};
}

FracIdeal ideal_inverse(const NumberField& K, const FracIdeal& I) {
  FracIdeal inv{module_colon(K, I.order.module, I.module), I.order};
  if (!(module_product(K, I.module, inv.module) == I.order.module))
    throw NotInvertible("ideal_inverse: ideal is not invertible");
  return inv;
}

Rational ideal_norm(const FracIdeal& I) { return module_volume(I.module) / module_volume(I.order.module); }

namespace {

double det_double(std::vector<double> a, int n) {
  double det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r * n + c]) > std::fabs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (int k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace

PrincipalityResult is_principal_bounded(const NumberField& K, const FracIdeal& I, long bound) {
  const int n = K.degree();
  PrincipalityResult res;
  auto basis = I.module.elements();
  Rational target = ideal_norm(I);
  double target_d = target.get_d();
  std::vector<std::vector<double>> mats;
  for (const auto& b : basis) {
    RatMatrix m = mult_matrix(K, b);
    std::vector<double> md(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) md[i * n + j] = m(i, j).get_d();
    mats.push_back(md);
  }
  std::vector<long> c(n);
  auto test = [&]() -> bool {
    ++res.candidates_tested;
    std::vector<double> m(static_cast<std::size_t>(n * n), 0.0);
    for (int k = 0; k < n; ++k)
      if (c[k])
        for (int e = 0; e < n * n; ++e) m[e] += static_cast<double>(c[k]) * mats[k][e];
    double had = 1;
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += m[i * n + j] * m[i * n + j];
      had *= std::sqrt(s);
    }
    double d = std::fabs(det_double(m, n));
    if (std::fabs(d - target_d) > 1e-9 * had + 1e-9 * target_d) return false;
    NFElement g = nf_from_rational(K, 0);
    for (int k = 0; k < n; ++k)
      if (c[k]) g = nf_add(g, nf_scale(basis[k], Rational(c[k])));
    if (abs(nf_norm(K, g)) != target) return false;
    if (!(module_scale(K, I.order.module, g) == I.module)) return false;
    res.generator = g;
    return true;
  };
  for (long r = 1; r <= bound; ++r) {
    // the first coordinate with |c_k| = r is k
    for (int k = 0; k < n; ++k) {
      for (long s : {r, -r}) {
        for (int i = 0; i < n; ++i) c[i] = i < k ? -(r - 1) : (i == k ? s : -r);
        for (;;) {
          if (test()) return res;
          int pos = n - 1;
          while (pos >= 0) {
            if (pos == k) {
              --pos;
              continue;
            }
            long hi = pos < k ? r - 1 : r;
            if (c[pos] < hi) {
              ++c[pos];
              break;
            }
            c[pos] = -hi;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

using KPoly = std::vector<NFElement>;  // ascending, over K

void trim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly kpoly_rem(const NumberField& K, KPoly a, const KPoly& b) {
  trim(a);
  NFElement inv_lead = nf_inv(K, b.back());
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    NFElement q = nf_mul(K, a.back(), inv_lead);
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = nf_sub(a[shift + i], nf_mul(K, q, b[i]));
    a.back() = nf_from_rational(K, 0);
    trim(a);
  }
  return a;
}

KPoly kpoly_gcd(const NumberField& K, KPoly a, KPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    KPoly r = kpoly_rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  NFElement inv = nf_inv(K, a.back());
  for (auto& c : a) c = nf_mul(K, c, inv);
  return a;
}

// g(y0 - k X) as a polynomial in X.
IntPoly substitute_linear(const IntPoly& g, const Integer& y0, const Integer& k) {
  IntPoly lin(std::vector<Integer>{y0, Integer(-k)});
  IntPoly r;
  for (int i = g.degree(); i >= 0; --i) r = r * lin + IntPoly::constant(g[i]);
  return r;
}

bool squarefree(const IntPoly& r) {
  if (r.degree() < 1) return false;
  return discriminant(r) != 0;
}

}  // namespace

std::vector<NFElement> roots_in_field(const NumberField& K, const IntPoly& g) {
  const int n = K.degree(), m = g.degree();
  if (m < 1) throw DomainError("roots_in_field: polynomial must be non-constant");
  std::vector<NFElement> roots;
  if (n == 1) {
    for (const auto& f : factor_over_z(g).factors)
      if (f.poly.degree() == 1) {
        NFElement e = nf_from_rational(K, Rational(-f.poly[0], f.poly[1]));
        e.coords[0].canonicalize();
        roots.push_back(e);
      }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const int deg = n * m;
  for (long k = 0;; ++k) {
    std::vector<Rational> xs, ys;
    for (int y = 0; y <= deg; ++y) {
      xs.emplace_back(y);
      ys.emplace_back(resultant(K.poly(), substitute_linear(g, y, k)));
    }
    std::vector<Rational> rc = interpolate(xs, ys);
    std::vector<Integer> ri;
    for (auto& q : rc) {
      if (q.get_den() != 1) throw InternalError("roots_in_field: non-integral norm resultant");
      ri.push_back(q.get_num());
    }
    IntPoly r(ri);
    if (!squarefree(r)) {
      if (k > 64) throw InternalError("roots_in_field: no squarefree shift found");
      continue;
    }
    KPoly G;
    for (int i = 0; i <= m; ++i) G.push_back(nf_from_rational(K, g[i]));
    NFElement ka = nf_scale(nf_generator(K), Rational(k));
    for (const auto& fac : factor_over_z(r).factors) {
      if (fac.poly.degree() != n) continue;
      // H(y) = h(y + k alpha)
      KPoly H{nf_from_rational(K, 0)};
      for (int i = fac.poly.degree(); i >= 0; --i) {
        KPoly next(H.size() + 1, nf_from_rational(K, 0));
        for (std::size_t j = 0; j < H.size(); ++j) {
          next[j + 1] = nf_add(next[j + 1], H[j]);
          next[j] = nf_add(next[j], nf_mul(K, H[j], ka));
        }
        next[0] = nf_add(next[0], nf_from_rational(K, fac.poly[i]));
        H = std::move(next);
      }
      KPoly d = kpoly_gcd(K, G, H);
      if (d.size() == 2) {
        NFElement beta = nf_neg(d[0]);
        if (!nf_eval(K, g, beta).is_zero()) throw InternalError("roots_in_field: recovered value is not a root");
        roots.push_back(beta);
      }
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace polydisc
