#include "polydisc/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "polydisc/errors.hpp"

namespace polydisc {

namespace {

using u64 = std::uint64_t;

// Dense polynomial over the prime field F_p, ascending, trimmed.
struct ModPoly {
  std::vector<u64> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ModPoly reduce(const IntPoly& f, u64 p) {
  ModPoly r;
  r.c.resize(f.coeffs().size());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  r.trim();
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + p - y) % p;
  }
  r.trim();
  return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + y) % p;
  }
  r.trim();
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.is_zero() || b.is_zero()) return {};
  ModPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  r.trim();
  return r;
}

// a = q*b + r with deg r < deg b.
void divmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  if (b.is_zero()) throw InternalError("ModPoly division by zero");
  ModPoly rem = a;
  int db = b.degree();
  u64 inv = invmod(b.c.back(), p);
  ModPoly quo;
  if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, 0);
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    u64 f = mulmod(rem.c.back(), inv, p);
    quo.c[k] = f;
    for (int j = 0; j <= db; ++j) rem.c[k + j] = (rem.c[k + j] + p - mulmod(f, b.c[j], p)) % p;
    rem.trim();
  }
  quo.trim();
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ModPoly mod(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly quotient(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly q;
  divmod(a, b, p, &q, nullptr);
  return q;
}

ModPoly make_monic(ModPoly a, u64 p) {
  if (a.is_zero()) return a;
  u64 inv = invmod(a.c.back(), p);
  for (auto& x : a.c) x = mulmod(x, inv, p);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.is_zero()) {
    ModPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

// s*a + t*b = 1 for coprime a, b.
void ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{{1}}, s1{};
  ModPoly t0{}, t1{{1}};
  while (!r1.is_zero()) {
    ModPoly q, r;
    divmod(r0, r1, p, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw InternalError("ext_gcd: inputs not coprime modulo p");
  u64 inv = invmod(r0.c[0], p);
  for (auto& x : s0.c) x = mulmod(x, inv, p);
  for (auto& x : t0.c) x = mulmod(x, inv, p);
  *s = std::move(s0);
  *t = std::move(t0);
}

ModPoly derivative(const ModPoly& a, u64 p) {
  ModPoly r;
  if (a.degree() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod(a.c[i], i % p, p);
  r.trim();
  return r;
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m, u64 p) {
  ModPoly r{{1}};
  r = mod(r, m, p);
  ModPoly b = mod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mod(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b, p), m, p);
  }
  return r;
}

void equal_degree_split(const ModPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    ModPoly a;
    a.c.resize(g.degree());
    for (auto& x : a.c) x = rng() % p;
    a.trim();
    if (a.degree() < 1) continue;
    ModPoly b = powmod(a, e, g, p);
    b = sub(b, ModPoly{{1}}, p);
    ModPoly c = gcd(g, b, p);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      equal_degree_split(c, d, p, rng, out);
      equal_degree_split(make_monic(quotient(g, c, p), p), d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a square-free monic polynomial over F_p.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<ModPoly> out;
  ModPoly x{{0, 1}};
  ModPoly h = x;
  Integer pe = static_cast<unsigned long>(p);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, pe, f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (g.degree() > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = make_monic(quotient(f, g, p), p);
      h = mod(h, f, p);
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

IntPoly lift_to_z(const ModPoly& a) {
  std::vector<Integer> c(a.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<unsigned long>(a.c[i]);
  return IntPoly(std::move(c));
}

IntPoly reduce_nonneg(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c = f.coeffs();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly reduce_symmetric(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c = f.coeffs();
  Integer half = m / 2;
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly product_mod(const std::vector<IntPoly>& fs, const Integer& lc, const Integer& m) {
  IntPoly r = IntPoly::constant(lc);
  for (const auto& f : fs) r = reduce_nonneg(r * f, m);
  return r;
}

// Lifts f = lc * prod(g_i) (mod p) to modulus m = p^k; g_i monic, pairwise
// coprime modulo p. Returns monic lifts.
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& gs, u64 p, const Integer& m) {
  if (gs.size() == 1) {
    // f = lc * G with G monic: G = f * lc^{-1} mod m.
    Integer inv;
    Integer lc = f.leading();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
    return {reduce_nonneg(f * inv, m)};
  }
  std::size_t half = gs.size() / 2;
  std::vector<ModPoly> left(gs.begin(), gs.begin() + half), right(gs.begin() + half, gs.end());
  ModPoly g{{1}}, h;
  for (const auto& x : left) g = mul(g, x, p);
  ModPoly prod_right{{1}};
  for (const auto& x : right) prod_right = mul(prod_right, x, p);
  h = mul(prod_right, ModPoly{{mpz_fdiv_ui(f.leading().get_mpz_t(), p)}}, p);

  ModPoly s, t;
  ext_gcd(g, h, p, &s, &t);
  IntPoly G = lift_to_z(g), H = lift_to_z(h);
  // keep lc(H) = lc(f) exactly so the top coefficients stay consistent
  {
    std::vector<Integer> hc = H.coeffs();
    hc.back() = f.leading();
    H = IntPoly(std::move(hc));
  }
  Integer pk = static_cast<unsigned long>(p);
  Integer pz = pk;
  while (pk < m) {
    IntPoly e = f - G * H;
    std::vector<Integer> ec = e.coeffs();
    for (auto& x : ec) {
      if (!mpz_divisible_p(x.get_mpz_t(), pk.get_mpz_t())) throw InternalError("hensel_lift: lost congruence");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
    }
    ModPoly em = reduce(IntPoly(std::move(ec)), p);
    ModPoly q, dg;
    divmod(mul(t, em, p), g, p, &q, &dg);
    ModPoly dh = add(mul(s, em, p), mul(q, h, p), p);
    G += lift_to_z(dg) * pk;
    H += lift_to_z(dh) * pk;
    pk *= pz;
    G = reduce_nonneg(G, pk);
    H = reduce_nonneg(H, pk);
  }
  std::vector<IntPoly> out = hensel_lift(reduce_nonneg(G, m), left, p, m);
  std::vector<IntPoly> rest = hensel_lift(reduce_nonneg(H, m), right, p, m);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_small_prime(u64 p) {
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Integer coefficient_bound(const IntPoly& f) {
  // lc * 2^n * ||f||_2 bounds lc times any factor's coefficients.
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  Integer norm = sqrt(s) + 1;
  Integer b = abs(f.leading()) * norm;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.degree());
  return b;
}

// Irreducible factors of a square-free primitive f with positive leading
// coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  const Integer& lc = f.leading();
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 3 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_fdiv_ui(lc.get_mpz_t(), p) == 0) continue;
    ModPoly fm = reduce(f, p);
    if (gcd(fm, derivative(fm, p), p).degree() != 0) continue;
    std::vector<ModPoly> fac = factor_mod_p(make_monic(fm, p), p);
    ++tried;
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw InternalError("factor_squarefree: no suitable prime");
  if (best.size() == 1) return {f};

  Integer bound = coefficient_bound(f) * 2;
  Integer m = static_cast<unsigned long>(best_p);
  while (m <= bound) m *= best_p;
  std::vector<IntPoly> lifted = hensel_lift(f, best, best_p, m);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<IntPoly> pick;
      for (auto i : idx) pick.push_back(lifted[i]);
      IntPoly cand = reduce_symmetric(product_mod(pick, rest.leading(), m), m);
      IntPoly q;
      if (!cand.is_zero() && cand.degree() > 0) {
        IntPoly g = primitive_part(cand);
        if (divides(g, rest, &q)) {
          result.push_back(g);
          rest = q;
          for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

}  // namespace

IntPoly Factorization::product() const {
  IntPoly r = IntPoly::constant(unit);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
  return r;
}

std::vector<Factor> squarefree_decomposition(const IntPoly& f) {
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  IntPoly b = gcd_primitive(f, f.derivative());
  IntPoly c = divide_exact(primitive_part(f), b);
  int i = 1;
  while (c.degree() > 0) {
    IntPoly y = gcd_primitive(b, c);
    IntPoly z = divide_exact(c, y);
    if (z.degree() > 0) out.push_back({primitive_part(z), i});
    b = divide_exact(b, y);
    c = y;
    ++i;
  }
  return out;
}

Factorization factor_over_z(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("factor_over_z: zero polynomial");
  Factorization out;
  if (f.degree() == 0) {
    out.unit = f[0];
    return out;
  }
  auto [c, prim] = content_and_primitive(f);
  out.unit = f.leading() < 0 ? Integer(-c) : c;
  for (const auto& sq : squarefree_decomposition(prim)) {
    IntPoly g = sq.poly;
    // pull out powers of X first; they are cheap and keep g(0) != 0
    if (g[0] == 0) {
      out.factors.push_back({IntPoly{0, 1}, sq.multiplicity});
      g = divide_exact(g, IntPoly{0, 1});
      if (g.degree() < 1) continue;
    }
    for (auto& h : factor_squarefree(g)) out.factors.push_back({h, sq.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (poly_less(a.poly, b.poly)) return true;
    if (poly_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  if (!(out.product() == f)) throw InternalError("factor_over_z: product does not reconstruct input");
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("is_irreducible: degree must be at least 1");
  if (content(f) != 1) throw DomainError("is_irreducible: polynomial is not primitive");
  Factorization fac = factor_over_z(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<Integer> integer_roots(const IntPoly& f) {
  std::vector<Integer> roots;
  for (const auto& fc : factor_over_z(f).factors) {
    const IntPoly& g = fc.poly;
    if (g.degree() == 1 && g[1] == 1) roots.push_back(-g[0]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool has_rational_root(const IntPoly& f) {
  for (const auto& fc : factor_over_z(f).factors)
    if (fc.poly.degree() == 1) return true;
  return false;
}

}  // namespace polydisc
