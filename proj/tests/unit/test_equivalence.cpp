#include <doctest.h>

#include "polydisc/equivalence.hpp"
#include "polydisc/errors.hpp"
#include "test_util.hpp"

using namespace polydisc;

namespace {

Unimodular2 random_unimodular(std::mt19937_64& rng, long k) {
  std::uniform_int_distribution<long> e(-k, k);
  for (;;) {
    Unimodular2 u{e(rng), e(rng), e(rng), e(rng), (rng() & 1) ? 1 : -1};
    if (u.valid()) return u;
  }
}

}  // namespace

TEST_CASE("apply_gl2 against the binomial expansion") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + i % 5, 20));
    Unimodular2 u = random_unimodular(rng, 3);
    IntPoly g = apply_gl2(f, u);
    IntPoly ref(oracle::apply_gl2(to_asc(f), u.a, u.b, u.c, u.d, u.sign));
    CHECK(g == ref);
    CHECK(discriminant(g, f.degree()) == discriminant(f));
  }
}

TEST_CASE("compose and inverse follow the action") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 3, 10));
    Unimodular2 u = random_unimodular(rng, 3), v = random_unimodular(rng, 3);
    CHECK(apply_gl2(apply_gl2(f, u, 3), v, 3) == apply_gl2(f, compose(u, v)));
    CHECK(apply_gl2(apply_gl2(f, u, 3), inverse(u), 3) == f);
  }
}

TEST_CASE("degree drop keeps the form discriminant") {
  // x^2 - x vanishes at (1, 1): the image loses its top coefficient
  IntPoly f = parse_poly("x^3 - x + 5");
  IntPoly g = apply_gl2(parse_poly("x^2 - x"), Unimodular2{1, 0, 1, 1, 1});
  CHECK(g.degree() == 1);
  CHECK(discriminant(g, 2) == 1);
  CHECK(discriminant(parse_poly("x^2 - x")) == 1);
  CHECK(discriminant(parse_poly("x + 5"), 3) == 0);
  CHECK(discriminant(f, 3) == discriminant(f));
  CHECK_THROWS_AS(discriminant(f, 2), DomainError);
}

TEST_CASE("text forms round-trip") {
  Unimodular2 u{2, 1, 1, 1, -1};
  CHECK(to_string(u) == "[[2,1],[1,1]],-1");
  CHECK(parse_unimodular2(to_string(u)) == u);
  ZShift s{-3, true};
  CHECK(parse_zshift(to_string(s)) == s);
  CHECK_THROWS_AS(parse_unimodular2("[[2,0],[0,1]],1"), DomainError);
}

TEST_CASE("Z-equivalence decisions") {
  IntPoly f = parse_poly("x^3 - x^2 - 2*x + 1");
  for (long a : {-4L, 0L, 7L})
    for (bool r : {false, true}) {
      ZShift s{a, r};
      IntPoly g = apply_zshift(f, s);
      auto w = z_equivalent(f, g);
      REQUIRE(w.has_value());
      CHECK(apply_zshift(f, *w) == g);
      CHECK(apply_gl2(f, zshift_matrix(s, 3)) == g);
    }
  CHECK(z_equivalent(f, parse_poly("x^3 + x^2 - 2*x - 1")).has_value());
  CHECK_FALSE(z_equivalent(parse_poly("x^3 - 2"), parse_poly("x^3 - 3")).has_value());
  CHECK_THROWS_AS(z_equivalent(parse_poly("x + 1"), parse_poly("x + 2")), DomainError);
}

TEST_CASE("bounded GL2 search finds planted witnesses") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 3, 6));
    if (discriminant(f) == 0) continue;
    Unimodular2 u = random_unimodular(rng, 2);
    IntPoly g = apply_gl2(f, u);
    auto r = gl2_equivalent_bounded(f, g, 2);
    REQUIRE(r.witness.has_value());
    CHECK(verify_gl2_witness(f, g, *r.witness));
  }
  CHECK_FALSE(gl2_equivalent_bounded(parse_poly("x^2 + 1"), parse_poly("x^2 + 2"), 3).witness.has_value());
}
