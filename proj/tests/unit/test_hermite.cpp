#include <doctest.h>

#include "polydisc/errors.hpp"
#include "polydisc/hermite.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("associated forms") {
  CHECK(associated_form(parse_poly("x^2 + 1")).to_string() == "x1^2 + x2^2");
  MultiPoly F = associated_form(parse_poly("x^3 - 2"));
  CHECK(F.coefficient({3, 0, 0}) == 1);
  CHECK(F.coefficient({0, 3, 0}) == 2);
  CHECK(F.coefficient({0, 0, 3}) == 4);
  CHECK(F.coefficient({1, 1, 1}) == -6);
  CHECK(F.terms().size() == 4);
  CHECK(decomposable_discriminant(F, parse_poly("x^3 - 2")) == -108);
}

TEST_CASE("associated form discriminant against numeric Vandermonde") {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 30) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + done % 4, 9));
    if (content(f) != 1 || discriminant(f) == 0) continue;
    Integer D = decomposable_discriminant(associated_form(f), f);
    CHECK(D == discriminant(f));
    auto v = oracle::vandermonde_discriminant(to_asc(f));
    CHECK(std::abs(static_cast<double>(v.real()) - D.get_d()) <= 1e-6 * (1 + std::abs(D.get_d())));
    ++done;
  }
}

TEST_CASE("lifted GL2 witnesses verify") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<long> e(-3, 3);
  int done = 0;
  while (done < 20) {
    IntPoly f = to_poly(oracle::random_poly(rng, 2 + done % 4, 8));
    if (content(f) != 1 || discriminant(f) == 0) continue;
    Unimodular2 u{e(rng), e(rng), e(rng), e(rng), (rng() & 1) ? 1 : -1};
    if (!u.valid()) continue;
    UnimodularN w = lift_gl2_witness(f, u);
    CHECK(verify_hermite_witness(f, apply_gl2(f, u), w));
    ++done;
  }
}

TEST_CASE("Hermite decisions") {
  auto d = hermite_equivalent(parse_poly("x^3 - 2"), parse_poly("x^3 + 3*x^2 + 3*x - 1"));
  CHECK(d.verdict == HermiteVerdict::Equivalent);
  auto e = hermite_equivalent(parse_poly("x^2 + 1"), parse_poly("x^2 + 2"));
  CHECK(e.verdict == HermiteVerdict::NotEquivalent);
  CHECK(e.reason == "discriminant");
  auto f = hermite_equivalent(parse_poly("x^3 - 2"), parse_poly("x^3 - 3"));
  CHECK(f.verdict == HermiteVerdict::NotEquivalent);
  IntPoly g = parse_poly("2*x^3 + x - 1");
  auto h = hermite_equivalent(g, apply_gl2(g, Unimodular2{2, 1, 1, 1, 1}));
  CHECK(h.verdict == HermiteVerdict::Equivalent);
  CHECK(to_string(HermiteVerdict::Unknown) == "unknown");
}

TEST_CASE("monic Hermite equivalence") {
  CHECK(monic_hermite_equivalent(parse_poly("x^2 + 1"), parse_poly("x^2 + 4*x + 5")));
  CHECK_FALSE(monic_hermite_equivalent(parse_poly("x^3 - 2"), parse_poly("x^3 - 3")));
  // a^2 generates Z[a] for the cyclic cubic, but its polynomial is not a shift
  CHECK(monic_hermite_equivalent(parse_poly("x^3 - x^2 - 2*x + 1"), parse_poly("x^3 - 5*x^2 + 6*x - 1")));
}
