#include "polydisc/diophantine.hpp"

#include <algorithm>
#include <set>

#include "polydisc/bounds.hpp"
#include "polydisc/errors.hpp"

namespace polydisc {

namespace {

using u64 = unsigned long long;

u64 wrap(const Integer& x) {
  // x mod 2^64 in two's complement
  Integer r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), 64);
  u64 lo = 0;
  if (mpz_size(r.get_mpz_t()) > 0) {
    if (sizeof(mp_limb_t) == 8) {
      lo = mpz_getlimbn(r.get_mpz_t(), 0);
    } else {
      lo = static_cast<u64>(mpz_getlimbn(r.get_mpz_t(), 0)) | (static_cast<u64>(mpz_getlimbn(r.get_mpz_t(), 1)) << 32);
    }
  }
  return lo;
}

IntPoly integral_poly(const std::vector<Rational>& c, const char* who) {
  std::vector<Integer> v;
  for (const auto& q : c) {
    if (q.get_den() != 1) throw InternalError(std::string(who) + ": non-integral coefficient");
    v.push_back(q.get_num());
  }
  return IntPoly(v);
}

}  // namespace

Rational element_discriminant(const NumberField& K, const NFElement& x) {
  std::vector<Rational> cp = nf_charpoly(K, x);
  const int n = K.degree();
  Integer L = 1;
  for (const auto& q : cp) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> v;
  for (const auto& q : cp) {
    Rational s = q * L;
    v.push_back(s.get_num());
  }
  Integer d = discriminant(IntPoly(v));
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(2 * n - 2));
  Rational r(d, scale);
  r.canonicalize();
  return r;
}

MultiPoly discriminant_form(const NumberField& K, const OrderModule& O) {
  const int n = K.degree();
  if (n < 2) throw DomainError("discriminant_form: degree must be at least 2");
  if (O.basis.empty() || !(O.basis[0] == nf_from_rational(K, 1)))
    throw DomainError("discriminant_form: order basis must start with 1");
  const int m = n - 1;      // variables x_2..x_n
  const int grid = n - 2;   // x_n is set to 1
  const int d = n * (n - 1);
  const int side = d + 1;
  std::size_t total = 1;
  for (int a = 0; a < grid; ++a) total *= static_cast<std::size_t>(side);
  std::vector<Rational> vals(total);
  std::vector<int> idx(static_cast<std::size_t>(grid), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t t = flat;
    for (int a = 0; a < grid; ++a) {
      idx[a] = static_cast<int>(t % side);
      t /= side;
    }
    NFElement x = O.basis[n - 1];
    for (int a = 0; a < grid; ++a)
      if (idx[a]) x = nf_add(x, nf_scale(O.basis[a + 1], Rational(idx[a])));
    vals[flat] = element_discriminant(K, x);
  }
  std::vector<Rational> xs;
  for (int i = 0; i < side; ++i) xs.emplace_back(i);
  std::size_t stride = 1;
  for (int a = 0; a < grid; ++a) {
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      std::vector<Rational> line;
      for (int i = 0; i < side; ++i) line.push_back(vals[base + i * stride]);
      auto c = interpolate(xs, line);
      for (int i = 0; i < side; ++i) vals[base + i * stride] = c[i];
    }
    stride *= static_cast<std::size_t>(side);
  }
  MultiPoly F(m);
  MultiPoly::Exponents e(static_cast<std::size_t>(m), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (vals[flat] == 0) continue;
    std::size_t t = flat;
    int deg = 0;
    for (int a = 0; a < grid; ++a) {
      e[a] = static_cast<int>(t % side);
      deg += e[a];
      t /= side;
    }
    if (deg > d) throw InternalError("discriminant_form: interpolation exceeded the degree");
    e[m - 1] = d - deg;
    F.add_term(e, vals[flat]);
  }
  if (!F.is_integral()) throw InternalError("discriminant_form: non-integral coefficient");
  return F;
}

IndexForm index_form(const NumberField& K, const OrderModule& O) {
  if (O.discriminant == 0) throw DomainError("index_form: zero discriminant");
  IndexForm out{O, discriminant_form(K, O), MultiPoly()};
  Rational inv(Integer(1), O.discriminant);
  inv.canonicalize();
  MultiPoly q = out.discriminant_form * inv;
  if (!q.is_integral()) throw InternalError("index_form: D_O does not divide the discriminant form");
  MultiPoly root;
  if (!sqrt_exact(q, &root)) throw InternalError("index_form: discriminant form / D_O is not a square");
  if (!root.is_integral()) throw InternalError("index_form: non-integral index form");
  if (!(root * root * Rational(O.discriminant) == out.discriminant_form))
    throw InternalError("index_form: I^2 D_O differs from the discriminant form");
  out.form = root;
  return out;
}

BoxSolutions solve_form_bounded(const MultiPoly& F, const std::vector<Integer>& targets, long box) {
  if (box < 0) throw DomainError("solve_form_bounded: box must be non-negative");
  if (!F.is_integral()) throw DomainError("solve_form_bounded: form must have integer coefficients");
  const int m = F.nvars();
  if (m < 1) throw DomainError("solve_form_bounded: form needs at least one variable");
  BoxSolutions out;
  out.box = box;
  struct Term {
    std::vector<int> e;
    u64 c;
  };
  std::vector<Term> terms;
  std::vector<int> maxexp(static_cast<std::size_t>(m), 0);
  for (const auto& [e, c] : F.terms()) {
    terms.push_back({e, wrap(c.get_num())});
    for (int j = 0; j < m; ++j) maxexp[j] = std::max(maxexp[j], e[j]);
  }
  const long width = 2 * box + 1;
  // pw[j][v * (maxexp + 1) + e] = (v - box)^e mod 2^64
  std::vector<std::vector<u64>> pw(static_cast<std::size_t>(m));
  for (int j = 1; j < m; ++j) {
    const int me = maxexp[j] + 1;
    pw[j].resize(static_cast<std::size_t>(width * me));
    for (long v = 0; v < width; ++v) {
      u64 x = static_cast<u64>(v - box), p = 1;
      for (int e = 0; e < me; ++e) {
        pw[j][v * me + e] = p;
        p *= x;
      }
    }
  }
  std::vector<u64> wt;
  for (const auto& t : targets) wt.push_back(wrap(t));
  std::set<Integer> exact_targets(targets.begin(), targets.end());
  const int d0 = maxexp[0];
  std::vector<u64> coef(static_cast<std::size_t>(d0 + 1));
  std::vector<long> tail(static_cast<std::size_t>(m), 0);  // indices into [0, width)
  std::vector<Integer> point(static_cast<std::size_t>(m));
  for (;;) {
    std::fill(coef.begin(), coef.end(), 0);
    for (const auto& t : terms) {
      u64 v = t.c;
      for (int j = 1; j < m; ++j)
        if (t.e[j]) v *= pw[j][tail[j] * (maxexp[j] + 1) + t.e[j]];
      coef[t.e[0]] += v;
    }
    for (long x0 = -box; x0 <= box; ++x0) {
      u64 x = static_cast<u64>(x0), h = 0;
      for (int k = d0; k >= 0; --k) h = h * x + coef[k];
      bool hit = false;
      for (u64 w : wt) hit = hit || h == w;
      if (!hit) continue;
      point[0] = x0;
      for (int j = 1; j < m; ++j) point[j] = tail[j] - box;
      if (!exact_targets.count(F.eval(point))) continue;
      out.solutions.push_back(point);
      for (const auto& p : point)
        if (abs(p) == box) out.touches_boundary = true;
    }
    int j = m - 1;
    while (j >= 1) {
      if (++tail[j] < width) break;
      tail[j] = 0;
      --j;
    }
    if (j < 1) break;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

BoxSolutions thue_solve_bounded(const IntPoly& F, const Integer& m, long box) {
  if (F.is_zero()) throw DomainError("thue_solve_bounded: zero form");
  const int d = F.degree();
  MultiPoly P(2);
  for (int k = 0; k <= d; ++k) P.add_term({k, d - k}, Rational(F[k]));
  return solve_form_bounded(P, {m}, box);
}

namespace {

void check_solver_degree(const IndexForm& idx) {
  const int n = idx.form.nvars() + 1;
  if (n > 4) throw UnsupportedDegree("index-form solving supports orders of degree at most 4");
}

}  // namespace

BoxSolutions solve_index_form_bounded(const IndexForm& idx, const Integer& value, long box) {
  check_solver_degree(idx);
  if (value == 0) throw DomainError("solve_index_form_bounded: value must be non-zero");
  Integer v = abs(value);
  return solve_form_bounded(idx.form, {v, Integer(-v)}, box);
}

BoxSolutions solve_discriminant_form_bounded(const IndexForm& idx, const Integer& D, long box) {
  check_solver_degree(idx);
  if (D == 0) throw DomainError("solve_discriminant_form_bounded: D must be non-zero");
  const Integer& DO = idx.order.discriminant;
  BoxSolutions out;
  out.box = box;
  if (!mpz_divisible_p(D.get_mpz_t(), DO.get_mpz_t())) return out;
  Integer q = D / DO;
  if (q <= 0 || !mpz_perfect_square_p(q.get_mpz_t())) return out;
  Integer v;
  mpz_sqrt(v.get_mpz_t(), q.get_mpz_t());
  out = solve_form_bounded(idx.form, {v, Integer(-v)}, box);
  for (const auto& s : out.solutions)
    if (idx.discriminant_form.eval(s) != D) throw InternalError("solve_discriminant_form_bounded: identity check failed");
  return out;
}

GeneratorSearch generators_of_order(const NumberField& K, const IndexForm& idx, long box) {
  BoxSolutions sols = solve_index_form_bounded(idx, 1, box);
  GeneratorSearch out;
  out.box = box;
  out.touches_boundary = sols.touches_boundary;
  const int n = K.degree();
  for (const auto& s : sols.solutions) {
    auto nz = std::find_if(s.begin(), s.end(), [](const Integer& x) { return x != 0; });
    if (nz == s.end() || *nz < 0) continue;
    GeneratorClass g;
    g.coords = s;
    g.element = nf_from_rational(K, 0);
    for (int i = 0; i < n - 1; ++i)
      if (s[i] != 0) g.element = nf_add(g.element, nf_scale(idx.order.basis[i + 1], Rational(s[i])));
    g.min_poly = integral_poly(nf_charpoly(K, g.element), "generators_of_order");
    if (!(power_module(K, g.element) == idx.order.module))
      throw InternalError("generators_of_order: Z[x] differs from the order");
    out.classes.push_back(std::move(g));
  }
  return out;
}

MonicEnumeration enumerate_monic_by_discriminant(int n, const Integer& D, long cap) {
  if (n < 2) throw DomainError("enumerate_monic_by_discriminant: degree must be at least 2");
  if (D == 0) throw DomainError("enumerate_monic_by_discriminant: discriminant must be non-zero");
  if (cap < 0) throw DomainError("enumerate_monic_by_discriminant: cap must be non-negative");
  MonicEnumeration out;
  out.degree = n;
  out.disc = D;
  out.cap = cap;
  out.max_degree = max_degree_for_discriminant(abs(D), true);
  if (n > out.max_degree)
    throw DomainError("enumerate_monic_by_discriminant: degree " + std::to_string(n) +
                      " exceeds the bound 2 + 2 log|D| / log 3, which allows at most degree " +
                      std::to_string(out.max_degree) + " for |D| = " + Integer(abs(D)).get_str());
  auto normalize = [n](const IntPoly& f) {
    // shift so that the X^(n-1) coefficient lies in [0, n-1]
    Integer a1 = f[n - 1], t;
    mpz_fdiv_q_ui(t.get_mpz_t(), a1.get_mpz_t(), static_cast<unsigned long>(n));
    return taylor_shift(f, Integer(-t));
  };
  auto reflect = [n](const IntPoly& f) {
    IntPoly g = negate_variable(f);
    return n % 2 ? -g : g;
  };
  std::set<std::vector<Integer>> keys;
  std::vector<Integer> c(static_cast<std::size_t>(n + 1));
  c[n] = 1;
  const long width = 2 * cap + 1;
  long long combos = 1;
  for (int i = 0; i < n - 1; ++i) combos *= width;
  for (int a1 = 0; a1 < n; ++a1) {
    c[n - 1] = a1;
    for (long long k = 0; k < combos; ++k) {
      long long t = k;
      for (int i = 0; i < n - 1; ++i) {
        c[i] = static_cast<long>(t % width - cap);
        t /= width;
      }
      IntPoly f(c);
      if (discriminant(f) != D) continue;
      auto k1 = normalize(f).descending();
      auto k2 = normalize(reflect(f)).descending();
      keys.insert(std::min(k1, k2));
    }
  }
  for (const auto& k : keys) out.classes.push_back(IntPoly::from_descending(k));
  return out;
}

}  // namespace polydisc
