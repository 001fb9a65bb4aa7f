// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "polydisc/bounds.hpp"
#include "polydisc/cns.hpp"
#include "polydisc/diophantine.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/errors.hpp"
#include "polydisc/factor.hpp"
#include "polydisc/hermite.hpp"
#include "polydisc/numberfield.hpp"
#include "polydisc/quadforms.hpp"
#include "polydisc/reduction.hpp"

using namespace polydisc;

namespace {

// Pinned limits and tolerances.
constexpr double kLimitInvariance = 30.0;   // s
constexpr double kLimitQuadratic = 60.0;    // s
constexpr double kLimitPipeline = 600.0;    // s
constexpr double kLimitMm9 = 10.0;          // s
constexpr double kLimitMm17 = 300.0;        // s
constexpr double kLimitCnsEach = 1.0;       // s
constexpr double kRelTolM = 1e-20;
constexpr long kPipelinePrecision = 256;    // bits
constexpr double kRelTolBounds = 1e-12;     // 12 significant digits
constexpr double kRelTolVandermonde = 1e-6;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("%s [%2d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), dt);
  std::fflush(stdout);
}

IntPoly to_poly(const std::vector<long long>& asc) {
  std::vector<Integer> c;
  for (long long x : asc) c.emplace_back(static_cast<long>(x));
  return IntPoly(c);
}

Unimodular2 random_unimodular(std::mt19937_64& rng, long k) {
  std::uniform_int_distribution<long> e(-k, k);
  for (;;) {
    Unimodular2 u{e(rng), e(rng), e(rng), e(rng), (rng() & 1) ? 1 : -1};
    if (u.valid()) return u;
  }
}

std::string secs(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", t);
  return buf;
}

unsigned worker_count() { return std::max(1u, std::min(16u, std::thread::hardware_concurrency())); }

// ---------------------------------------------------------------------------

Outcome discriminant_invariance() {
  std::mt19937_64 rng(kSeed + 1);
  auto t0 = Clock::now();
  long checks = 0, bad = 0;
  for (int i = 0; i < 1000; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + i % 5, 20));
    Integer D = discriminant(f);
    for (int j = 0; j < 20; ++j) {
      // as a binary form of degree n; the polynomial degree drops when f has
      // a root at a/c
      if (discriminant(apply_gl2(f, random_unimodular(rng, 3)), f.degree()) != D) ++bad;
      ++checks;
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream s;
  s << checks - bad << "/" << checks << " exact, " << secs(dt) << " < " << kLimitInvariance << "s";
  return {bad == 0 && dt < kLimitInvariance, s.str()};
}

Outcome quadratic_bounds() {
  auto t0 = Clock::now();
  std::atomic<long> total{0}, bad{0}, monic{0};
  std::vector<long> leads;
  for (long a = -50; a <= 50; ++a)
    if (a != 0) leads.push_back(a);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < leads.size();) {
      long a = leads[k];
      for (long b = -50; b <= 50; ++b)
        for (long c = -50; c <= 50; ++c) {
          long D = b * b - 4 * a * c;
          if (D == 0) continue;
          IntPoly f(std::vector<Integer>{c, b, a});
          QuadraticReduction r = reduce_quadratic(f);
          IntPoly ref(oracle::apply_gl2(f.coeffs(), r.witness.a, r.witness.b, r.witness.c, r.witness.d, r.witness.sign));
          Integer H = height(r.g);
          bool ok = ref == r.g && discriminant(r.g) == D && r.witness.valid();
          bool square = false;
          if (D > 0) {
            long s = static_cast<long>(std::sqrt(static_cast<double>(D)));
            while (s * s > D) --s;
            while ((s + 1) * (s + 1) <= D) ++s;
            square = s * s == D;
          }
          if (D < 0) ok = ok && 3 * H <= -D;
          else if (!square) ok = ok && 4 * H <= D;
          else ok = ok && H * H <= D;
          if (a == 1) {
            MonicQuadraticReduction m = reduce_monic_quadratic(f);
            ok = ok && apply_zshift(f, m.shift) == m.g && 4 * height(m.g) <= std::labs(D) + 4;
            ++monic;
          }
          ++total;
          if (!ok) ++bad;
        }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < worker_count(); ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  double dt = seconds_since(t0);
  std::ostringstream s;
  s << total - bad << "/" << total << " quadratics within their case bound (" << monic << " monic also |D|/4+1), "
    << secs(dt) << " < " << kLimitQuadratic << "s";
  return {bad == 0 && dt < kLimitQuadratic, s.str()};
}

Outcome gauss_soundness() {
  long total = 0, bad = 0;
  std::set<std::array<long, 3>> reduced23;
  for (long A = 1; A <= 30; ++A)
    for (long B = -30; B <= 30; ++B)
      for (long C = 1; C <= 30; ++C) {
        if (B * B - 4 * A * C >= 0) continue;
        IntBQF q{A, B, C};
        ReducedBQF r = gauss_reduce(q);
        const IntBQF& g = r.form;
        bool ok = abs(g.B) <= g.A && g.A <= g.C && is_gauss_reduced(g);
        ok = ok && transform(q, r.witness) == g && transform(g, inverse(r.witness)) == q;
        ok = ok && g.disc() == q.disc() && r.witness.det() == 1;
        ++total;
        if (!ok) ++bad;
        if (q.disc() == -23) reduced23.insert({g.A.get_si(), g.B.get_si(), g.C.get_si()});
      }
  int classes = oracle::count_form_classes(-23, 30, 4);
  std::ostringstream s;
  s << total - bad << "/" << total << " forms reduced soundly; D=-23: " << reduced23.size()
    << " reduced forms, orbit oracle " << classes;
  return {bad == 0 && static_cast<int>(reduced23.size()) == classes && classes == 3, s.str()};
}

Outcome reduction_pipeline() {
  std::mt19937_64 rng(kSeed + 4);
  std::vector<IntPoly> corpus;
  while (corpus.size() < 200) {
    int n = 3 + static_cast<int>(corpus.size() % 4);
    IntPoly f = to_poly(oracle::random_poly(rng, n, 50));
    if (content(f) != 1 || !is_irreducible(f)) continue;
    corpus.push_back(f);
  }
  auto t0 = Clock::now();
  long bad_witness = 0, bad_disc = 0, bad_bound = 0, bad_M = 0, bad_pl = 0, bad_add = 0;
  double worst_M = 0;
  for (const IntPoly& f : corpus) {
    const int n = f.degree();
    Integer D = discriminant(f);
    PolynomialReduction r = reduce_polynomial(f, kPipelinePrecision);
    IntPoly ref(oracle::apply_gl2(f.coeffs(), r.witness.a, r.witness.b, r.witness.c, r.witness.d, r.witness.sign));
    if (!(ref == r.g) || !r.witness.valid()) ++bad_witness;
    if (discriminant(r.g) != D) ++bad_disc;
    if (r.rational_root || !r.bound_holds || !(BigFloat(height(r.g), 256) <= r.bound.lower())) ++bad_bound;

    // |D|^(1/(n-2)) with raw MPFR
    mpfr_t m;
    mpfr_init2(m, 256);
    Integer aD = abs(D);
    mpfr_set_z(m, aD.get_mpz_t(), MPFR_RNDN);
    mpfr_rootn_ui(m, m, static_cast<unsigned long>(n - 2), MPFR_RNDN);
    BigFloat refM(256);
    mpfr_set(refM.get(), m, MPFR_RNDN);
    mpfr_clear(m);
    BigFloat rel = abs(r.M.mid - refM) / refM;
    worst_M = std::max(worst_M, rel.to_double());
    if (!(rel.to_double() < kRelTolM)) ++bad_M;

    DeltaTable dt = delta_table(linear_factorization(isolate_roots(f, kPipelinePrecision)));
    if (!plucker_identity_holds(dt)) ++bad_pl;
    if (!additive_identity_holds(dt)) ++bad_add;
  }
  double t = seconds_since(t0);
  std::ostringstream s;
  s << corpus.size() << " polynomials: witness fails " << bad_witness << ", disc fails " << bad_disc << ", bound fails "
    << bad_bound << ", M fails " << bad_M << " (worst rel " << worst_M << "), Pluecker fails " << bad_pl
    << ", additive fails " << bad_add << ", " << secs(t) << " < " << kLimitPipeline << "s";
  bool ok = bad_witness + bad_disc + bad_bound + bad_M + bad_pl + bad_add == 0 && t < kLimitPipeline;
  return {ok, s.str()};
}

// Root p/q of a3 X^3 + ... + a0 with q | a3, p | a0.
bool cubic_has_rational_root(const std::array<long long, 4>& c, const std::vector<std::vector<long long>>& divisors) {
  if (c[0] == 0) return true;
  for (long long q : divisors[std::llabs(c[3])])
    for (long long p0 : divisors[std::llabs(c[0])])
      for (long long p : {p0, -p0}) {
        long long v = c[3] * p * p * p + c[2] * p * p * q + c[1] * p * q * q + c[0] * q * q * q;
        if (v == 0) return true;
      }
  return false;
}

__int128 cubic_disc(const std::array<long long, 4>& c) {
  __int128 a = c[3], b = c[2], cc = c[1], d = c[0];
  return b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * cc * d;
}

std::array<__int128, 4> apply_cubic(const std::array<long long, 4>& f, const std::array<long long, 4>& w) {
  // sum f_k (aX + b)^k (cX + d)^(3-k)
  std::array<__int128, 4> out{};
  for (int k = 0; k <= 3; ++k) {
    std::array<__int128, 4> t{1, 0, 0, 0};
    int deg = 0;
    auto mul = [&](__int128 c0, __int128 c1) {
      std::array<__int128, 4> r{};
      for (int i = 0; i <= deg; ++i) {
        r[i] += t[i] * c0;
        r[i + 1] += t[i] * c1;
      }
      t = r;
      ++deg;
    };
    for (int i = 0; i < k; ++i) mul(w[1], w[0]);
    for (int i = 0; i < 3 - k; ++i) mul(w[3], w[2]);
    for (int i = 0; i <= 3; ++i) out[i] += static_cast<__int128>(f[k]) * t[i];
  }
  return out;
}

// |27 D|^(1/4) from the integer, rounded at kInvariantPrecision bits, against
// the ball from certified roots; the rounding error of the former is
// 2^(1 - kInvariantPrecision) relative.
constexpr mpfr_prec_t kInvariantPrecision = 256;

// Certified reduction of a possibly non-primitive cubic: reduce the primitive
// part and scale back by the content.
Integer certified_height(const IntPoly& f, bool* bound_holds = nullptr) {
  auto [cont, prim] = content_and_primitive(f);
  PolynomialReduction r = reduce_polynomial(prim);
  if (bound_holds) *bound_holds = r.bound_holds;
  return abs(cont) * height(r.g);
}

bool invariant_matches(const IntPoly& p) {
  BigFloat exact = hermite_cubic_invariant(p, kInvariantPrecision);
  RealBall num = hermite_cubic_invariant_numeric(p, kInvariantPrecision);
  BigFloat slack = abs(exact) * exp2(1 - kInvariantPrecision, kInvariantPrecision);
  return num.lower() <= exact + slack && exact - slack <= num.upper();
}

Outcome cubic_bound() {
  std::vector<std::vector<long long>> divisors(31);
  for (long long x = 1; x <= 30; ++x)
    for (long long k = 1; k <= x; ++k)
      if (x % k == 0) divisors[x].push_back(k);
  std::vector<long long> leads;
  for (long long a = -30; a <= 30; ++a)
    if (a != 0) leads.push_back(a);
  std::atomic<std::size_t> next{0};
  std::atomic<long> irreducible{0}, bad{0}, fallback{0};
  std::mutex sample_lock;
  std::vector<std::array<long long, 4>> sample;
  auto work = [&] {
    long seen = 0;
    for (std::size_t k; (k = next++) < leads.size();) {
      const long long a = leads[k];
      for (long long b = -30; b <= 30; ++b)
        for (long long c = -30; c <= 30; ++c)
          for (long long d = -30; d <= 30; ++d) {
            std::array<long long, 4> f{d, c, b, a};
            if (cubic_has_rational_root(f, divisors)) continue;
            ++irreducible;
            __int128 D = cubic_disc(f);
            __int128 aD = D < 0 ? -D : D;
            FastCubicReduction fr;
            __int128 H = 0;
            bool ok = true;
            if (reduce_cubic_fast(f, &fr)) {
              auto g = apply_cubic(f, fr.witness);
              __int128 det = static_cast<__int128>(fr.witness[0]) * fr.witness[3] -
                             static_cast<__int128>(fr.witness[1]) * fr.witness[2];
              std::array<long long, 4> gl{};
              for (int i = 0; i < 4; ++i) {
                ok = ok && g[i] == fr.g[i];
                gl[i] = fr.g[i];
                __int128 v = g[i] < 0 ? -g[i] : g[i];
                H = std::max(H, v);
              }
              ok = ok && (det == 1 || det == -1) && cubic_disc(gl) == D;
            } else {
              ++fallback;
              H = certified_height(to_poly({f[0], f[1], f[2], f[3]})).get_si();
            }
            ok = ok && 729 * H * H <= 4096 * aD;
            if (!ok) ++bad;
            if (++seen % 20011 == 0) {
              std::lock_guard<std::mutex> lock(sample_lock);
              sample.push_back(f);
            }
          }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < worker_count(); ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  // Certified cross-check and the invariant |27 D|^(1/4) on the sample.
  long mismatch = 0, inv_bad = 0;
  for (const auto& f : sample) {
    IntPoly p = to_poly({f[0], f[1], f[2], f[3]});
    FastCubicReduction fr;
    reduce_cubic_fast(f, &fr);
    long long hf = 0;
    for (long long x : fr.g) hf = std::max(hf, std::llabs(x));
    bool holds = false;
    if (certified_height(p, &holds) != static_cast<long>(hf) || !holds) ++mismatch;
    if (!invariant_matches(p)) ++inv_bad;
  }
  std::ostringstream s;
  s << irreducible - bad << "/" << irreducible << " irreducible cubics satisfy 729 H(g)^2 <= 4096 |D| (" << fallback
    << " certified fallbacks); certified cross-check mismatches " << mismatch << "/" << sample.size()
    << "; |27D|^(1/4) outside root ball " << inv_bad << "/" << sample.size();
  return {bad == 0 && mismatch == 0 && inv_bad == 0 && irreducible > 0, s.str()};
}

Outcome associated_form_discriminant() {
  std::mt19937_64 rng(kSeed + 6);
  long done = 0, bad = 0;
  while (done < 200) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + static_cast<int>(done % 4), 20));
    if (content(f) != 1 || discriminant(f) == 0) continue;
    Integer D = oracle::discriminant(f.coeffs());
    Integer DF = decomposable_discriminant(associated_form(f), f);
    auto v = oracle::vandermonde_discriminant(f.coeffs());
    double rel = std::abs(static_cast<double>(v.real()) - D.get_d()) / std::max(1.0, std::abs(D.get_d()));
    if (DF != D || rel > kRelTolVandermonde) ++bad;
    ++done;
  }
  MultiPoly F = associated_form(parse_poly("x^3 - 2"));
  bool coeffs = F.terms().size() == 4 && F.coefficient({3, 0, 0}) == 1 && F.coefficient({0, 3, 0}) == 2 &&
                F.coefficient({0, 0, 3}) == 4 && F.coefficient({1, 1, 1}) == -6;
  std::ostringstream s;
  s << done - bad << "/" << done << " exact D([f]) = D(f) (Sylvester and numeric Vandermonde oracles); [x^3-2] = "
    << F.to_string();
  return {bad == 0 && coeffs, s.str()};
}

Outcome invariant_orders() {
  std::mt19937_64 rng(kSeed + 7);
  long fields = 0, nonmonic = 0, bad_disc = 0, bad_mult = 0, moves = 0, bad_moves = 0;
  while (fields < 200) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + static_cast<int>(fields % 4), 10));
    if (content(f) != 1 || !is_irreducible(f)) continue;
    NumberField K(f);
    OrderModule O = invariant_order(K);
    if (O.discriminant != discriminant(f) || trace_form_discriminant(K, O.basis) != Rational(discriminant(f))) ++bad_disc;
    if (!(multiplier_ring(K, power_module(K, nf_generator(K))) == O.module)) ++bad_mult;
    if (abs(f.leading()) != 1) ++nonmonic;
    NFElement a = nf_generator(K);
    for (int j = 0; j < 50; ++j) {
      Unimodular2 u = random_unimodular(rng, 3);
      IntPoly g = apply_gl2(K.poly(), u);
      NFElement num = nf_sub(nf_scale(a, Rational(u.d)), nf_from_rational(K, Rational(u.b)));
      NFElement den = nf_sub(nf_from_rational(K, Rational(u.a)), nf_scale(a, Rational(u.c)));
      NFElement beta = nf_mul(K, num, nf_inv(K, den));
      bool ok = nf_eval(K, g, beta).is_zero() && invariant_order_of(K, g, beta).module == O.module;
      ++moves;
      if (!ok) ++bad_moves;
    }
    ++fields;
  }
  std::ostringstream s;
  s << fields << " fields (" << nonmonic << " non-monic): disc fails " << bad_disc << ", multiplier ring fails " << bad_mult
    << ", Z_alpha = Z_beta " << moves - bad_moves << "/" << moves;
  return {bad_disc + bad_mult + bad_moves == 0 && nonmonic > 0, s.str()};
}

Outcome mm_cubic() {
  auto t0 = Clock::now();
  NumberField K(parse_poly("x^3 - x^2 - 2*x + 1"));
  OrderModule O = invariant_order(K);
  IndexForm idx = index_form(K, O);
  GeneratorSearch gs = generators_of_order(K, idx, 1000);
  double dt = seconds_since(t0);
  long z_equiv = 0, not_hermite = 0;
  std::vector<std::size_t> rep(gs.classes.size());
  for (std::size_t i = 0; i < gs.classes.size(); ++i) rep[i] = i;
  for (std::size_t i = 0; i < gs.classes.size(); ++i)
    for (std::size_t j = i + 1; j < gs.classes.size(); ++j) {
      const IntPoly& p = gs.classes[i].min_poly;
      const IntPoly& q = gs.classes[j].min_poly;
      if (z_equivalent(p, q)) {
        ++z_equiv;
        rep[j] = std::min(rep[j], rep[i]);
      }
      if (!monic_hermite_equivalent(p, q)) ++not_hermite;
    }
  std::set<std::size_t> poly_classes(rep.begin(), rep.end());
  // The field is cyclic: a Galois conjugate of a generator is a Z-inequivalent
  // generator with the same minimal polynomial up to Z-equivalence, so the
  // generator classes collapse onto fewer polynomial classes.
  std::ostringstream s;
  s << "mm = " << gs.classes.size() << " (box 1000, boundary " << (gs.touches_boundary ? "touched" : "clear")
    << ") in " << secs(dt) << " < " << kLimitMm9 << "s; Z-equivalent minimal polynomial pairs " << z_equiv
    << " (" << poly_classes.size() << " polynomial classes), non-Hermite-equivalent pairs " << not_hermite;
  return {gs.classes.size() == 9 && dt < kLimitMm9 && z_equiv == 0 && not_hermite == 0, s.str()};
}

Outcome mm_quartic() {
  IntPoly f = parse_poly("x^4 - 4*x^2 - x + 1");
  Integer D = discriminant(f);
  if (!oracle::is_squarefree(D)) return {false, "D(f) = " + D.get_str() + " is not squarefree; maximality unknown"};
  auto t0 = Clock::now();
  NumberField K(f);
  IndexForm idx = index_form(K, invariant_order(K));
  GeneratorSearch gs = generators_of_order(K, idx, 200);
  double dt = seconds_since(t0);
  std::ostringstream s;
  s << "D = " << D << " squarefree; mm = " << gs.classes.size() << " (box 200) in " << secs(dt) << " < " << kLimitMm17
    << "s";
  return {gs.classes.size() == 17 && dt < kLimitMm17, s.str()};
}

Outcome degree_gate() {
  int m = max_degree_for_discriminant(49, false);
  int mm = max_degree_for_discriminant(49, true);
  std::string msg;
  bool rejected = false;
  try {
    enumerate_monic_by_discriminant(mm + 1, 49, 1);
  } catch (const DomainError& e) {
    msg = e.what();
    rejected = msg.find("2 + 2 log|D| / log 3") != std::string::npos;
  }
  std::ostringstream s;
  s << "max_degree(49, non-monic) = " << m << ", monic = " << mm << "; degree " << mm + 1 << " rejected: \"" << msg << "\"";
  return {m == 10 && mm == 9 && rejected, s.str()};
}

Outcome hermite_decisions() {
  auto a = hermite_equivalent(parse_poly("x^3 - 2"), parse_poly("x^3 + 3*x^2 + 3*x - 1"));
  auto b = hermite_equivalent(parse_poly("x^2 + 1"), parse_poly("x^2 + 2"));
  std::mt19937_64 rng(kSeed + 11);
  long done = 0, bad = 0;
  while (done < 50) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + static_cast<int>(done % 4), 10));
    if (content(f) != 1 || !is_irreducible(f)) continue;
    Unimodular2 u = random_unimodular(rng, 3);
    if (!verify_hermite_witness(f, apply_gl2(f, u), lift_gl2_witness(f, u))) ++bad;
    ++done;
  }
  std::ostringstream s;
  s << "(x^3-2, x^3+3x^2+3x-1) -> " << to_string(a.verdict) << "; (x^2+1, x^2+2) -> " << to_string(b.verdict) << ":"
    << b.reason << "; lifted witnesses " << done - bad << "/" << done;
  bool ok = a.verdict == HermiteVerdict::Equivalent && b.verdict == HermiteVerdict::NotEquivalent &&
            b.reason == "discriminant" && bad == 0;
  return {ok, s.str()};
}

Outcome cns_cases() {
  struct Case {
    const char* base;
    CnsVerdict want;
  };
  std::ostringstream s;
  bool ok = true;
  for (Case c : {Case{"x + 2", CnsVerdict::IsCNS}, Case{"x - 2", CnsVerdict::NotCNS}, Case{"x^2 + 2*x + 2", CnsVerdict::IsCNS},
                 Case{"x^2 - 2*x + 2", CnsVerdict::NotCNS}}) {
    auto t0 = Clock::now();
    CnsDecision d = is_cns_base(make_cns_base(parse_poly(c.base)));
    double dt = seconds_since(t0);
    ok = ok && d.verdict == c.want && dt < kLimitCnsEach;
    s << c.base << " -> " << to_string(d.verdict) << " " << secs(dt) << "; ";
  }
  CnsExpansion e = cns_expand(make_cns_base(parse_poly("x + 2")), {3});
  bool negabinary = e.terminated && e.digits == std::vector<Integer>{1, 1, 1};
  s << "3 in base -2 = [";
  for (std::size_t i = 0; i < e.digits.size(); ++i) s << (i ? "," : "") << e.digits[i];
  s << "]; ";
  // Q(i): the maximal order Z[i] has a power integral basis and a CNS base.
  NumberField K(parse_poly("x^2 + 1"));
  OrderModule O = invariant_order(K);
  GeneratorSearch gs = generators_of_order(K, index_form(K, O), 50);
  NFElement base = nf_from_poly(K, {Rational(-1), Rational(1)});  // -1 + i, root of x^2 + 2x + 2
  bool same_order = power_module(K, base) == O.module;
  bool consistent = is_maximal_order(K, O) && gs.classes.size() == 1 && same_order &&
                    is_cns_base(make_cns_base(parse_poly("x^2 + 2*x + 2"))).verdict == CnsVerdict::IsCNS;
  s << "Q(i): power bases " << gs.classes.size() << ", CNS base -1+i generates Z[i]: " << (same_order ? "yes" : "no");
  return {ok && negabinary && consistent, s.str()};
}

Outcome bound_calculators() {
  long total = 0, bad = 0;
  double worst = 0;
  for (int n = 2; n <= 6; ++n)
    for (long d = 1; d <= 1000; ++d) {
      double r1 = oracle::monic_z_bound_rel_error(n, d, bound_monic_equivalence_height(n, d).log10_bound.get());
      double r2 = oracle::gl2_bound_rel_error(n, d, bound_gl2_equivalence_height(n, d).log10_bound.get());
      worst = std::max({worst, r1, r2});
      total += 2;
      if (!(r1 <= kRelTolBounds) || !(r2 <= kRelTolBounds)) ++bad;
    }
  std::ostringstream s;
  s << total - bad << "/" << total << " log10 values within " << kRelTolBounds << " (worst rel " << worst << ")";
  return {bad == 0, s.str()};
}

}  // namespace

int main() {
  report(1, "discriminant invariance under GL2(Z)", discriminant_invariance);
  report(2, "quadratic reduction bounds", quadratic_bounds);
  report(3, "Gauss reduction soundness", gauss_soundness);
  report(4, "general reduction pipeline", reduction_pipeline);
  report(5, "cubic height bound", cubic_bound);
  report(6, "associated form discriminant", associated_form_discriminant);
  report(7, "invariant order invariants", invariant_orders);
  report(8, "mm = 9 for x^3 - x^2 - 2x + 1", mm_cubic);
  report(9, "mm = 17 for x^4 - 4x^2 - x + 1", mm_quartic);
  report(10, "degree gate", degree_gate);
  report(11, "Hermite equivalence decisions", hermite_decisions);
  report(12, "canonical number systems", cns_cases);
  report(13, "equivalence bound calculators", bound_calculators);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
