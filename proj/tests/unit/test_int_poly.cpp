#include <doctest.h>

#include "polydisc/errors.hpp"
#include "polydisc/int_poly.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("parse both text forms") {
  IntPoly f = parse_poly("x^3 - x^2 - 2*x + 1");
  CHECK(f == IntPoly{1, -2, -1, 1});
  CHECK(parse_poly("[1,-2,-1,1]") == f);
  CHECK(parse_poly("-x^2+1") == IntPoly{1, 0, -1});
  CHECK(parse_poly("3x^2 - 2x") == IntPoly{0, -2, 3});
  CHECK(parse_poly("X^2 + X") == IntPoly{0, 1, 1});
  CHECK(parse_poly("7") == IntPoly{7});
  CHECK(parse_poly("x^2 + x^2") == IntPoly{0, 0, 2});
}

TEST_CASE("malformed text raises ParseError") {
  CHECK_THROWS_AS(parse_poly("x^^2"), ParseError);
  CHECK_THROWS_AS(parse_poly("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_poly("y + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 1 + i % 6, 40));
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_poly(f.to_list_string()) == f);
  }
  CHECK(IntPoly{1, -2, -1, 1}.to_string() == "x^3 - x^2 - 2*x + 1");
  CHECK(IntPoly{1, -2, -1, 1}.to_list_string() == "[1,-2,-1,1]");
}

TEST_CASE("discriminant against the Sylvester determinant") {
  CHECK(discriminant(parse_poly("x^3 - x^2 - 2*x + 1")) == 49);
  CHECK(discriminant(parse_poly("x^2 + 1")) == -4);
  CHECK(discriminant(parse_poly("x^3 - 2")) == -108);
  CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 1 + i % 7, 25));
    CHECK(discriminant(f) == oracle::discriminant(to_asc(f)));
  }
}

TEST_CASE("resultant against the Sylvester determinant") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = to_poly(oracle::random_poly(rng, 1 + i % 5, 15));
    IntPoly g = to_poly(oracle::random_poly(rng, 1 + (i / 5) % 5, 15));
    CHECK(resultant(f, g) == oracle::sylvester_resultant(to_asc(f), to_asc(g)));
  }
}

TEST_CASE("height, content and exact division") {
  IntPoly f = parse_poly("6*x^2 - 4*x + 10");
  CHECK(height(f) == 10);
  CHECK(content(f) == 2);
  CHECK(primitive_part(f) == parse_poly("3*x^2 - 2*x + 5"));
  IntPoly g = parse_poly("x - 1"), h = parse_poly("x^2 + x + 1");
  CHECK(divide_exact(g * h, g) == h);
  CHECK_FALSE(divides(parse_poly("x - 2"), g * h));
  CHECK_THROWS_AS(divide_exact(h, parse_poly("x-2")), InternalError);
  CHECK(gcd_primitive(g * h, g * parse_poly("x+5")) == g);
}

TEST_CASE("shifts and reversal") {
  IntPoly f = parse_poly("x^3 - 2");
  CHECK(taylor_shift(f, 1) == parse_poly("x^3 + 3*x^2 + 3*x - 1"));
  CHECK(negate_variable(f) == parse_poly("-x^3 - 2"));
  CHECK(reverse(f) == parse_poly("-2*x^3 + 1"));
  CHECK(f.eval_homogeneous(1, 1, 3) == -1);
  CHECK(f.derivative() == parse_poly("3*x^2"));
}

TEST_CASE("degree-one discriminant is one") {
  CHECK(discriminant(parse_poly("3*x + 7")) == 1);
  CHECK_THROWS_AS(discriminant(parse_poly("5")), DomainError);
}
