#include <doctest.h>

#include "polydisc/errors.hpp"
#include "polydisc/quadforms.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("form text") {
  IntBQF q = parse_bqf("(2,-1,3)");
  CHECK(q == IntBQF{2, -1, 3});
  CHECK(to_string(q) == "(2,-1,3)");
  CHECK(q.disc() == -23);
  CHECK(IntBQF::from_poly(q.to_poly()) == q);
  CHECK_THROWS_AS(parse_bqf("(1,2)"), ParseError);
}

TEST_CASE("Gauss reduction of small forms") {
  auto r = gauss_reduce(IntBQF{10, 14, 5});  // disc -4
  CHECK(r.form == IntBQF{1, 0, 1});
  CHECK(transform(IntBQF{10, 14, 5}, r.witness) == r.form);
  CHECK(r.witness.det() == 1);
  CHECK(is_gauss_reduced(IntBQF{2, -1, 3}));
  CHECK_FALSE(is_gauss_reduced(IntBQF{2, -2, 3}));
  CHECK_FALSE(is_gauss_reduced(IntBQF{3, -1, 3}));
  CHECK_THROWS_AS(gauss_reduce(IntBQF{1, 3, 1}), DomainError);
}

TEST_CASE("reduced forms of discriminant -23 against orbit union-find") {
  std::set<std::tuple<long, long, long>> reduced;
  for (long A = 1; A <= 30; ++A)
    for (long B = -30; B <= 30; ++B) {
      long num = B * B + 23;
      if (num % (4 * A)) continue;
      long C = num / (4 * A);
      if (C > 30) continue;
      auto r = gauss_reduce(IntBQF{A, B, C});
      reduced.emplace(r.form.A.get_si(), r.form.B.get_si(), r.form.C.get_si());
    }
  CHECK(reduced.size() == 3);
  CHECK(static_cast<int>(reduced.size()) == oracle::count_form_classes(-23, 30, 4));
}

TEST_CASE("quadratic polynomial reduction meets the case bounds") {
  for (const char* s : {"x^2 + 6*x + 10", "7*x^2 + 13*x + 11", "x^2 - 7", "3*x^2 + 17*x + 2", "6*x^2 + 5*x + 1"}) {
    IntPoly f = parse_poly(s);
    QuadraticReduction r = reduce_quadratic(f);
    CHECK(r.bound_holds);
    CHECK(apply_gl2(f, r.witness) == r.g);
    CHECK(discriminant(r.g) == discriminant(f));
  }
  QuadraticReduction r = reduce_quadratic(parse_poly("x^2 + 6*x + 10"));
  CHECK(r.g == parse_poly("x^2 + 1"));
  CHECK(r.report.name == "quadratic");
}

TEST_CASE("monic quadratic reduction") {
  MonicQuadraticReduction r = reduce_monic_quadratic(parse_poly("x^2 + 101*x + 7"));
  CHECK(r.bound_holds);
  CHECK(apply_zshift(parse_poly("x^2 + 101*x + 7"), r.shift) == r.g);
  CHECK(r.g[1] >= 0);
  CHECK(r.g[1] <= 1);
  CHECK_THROWS_AS(reduce_monic_quadratic(parse_poly("2*x^2 + 1")), DomainError);
}

TEST_CASE("real Gauss reduction agrees with the integer one") {
  for (auto q : {IntBQF{10, 14, 5}, IntBQF{33, 50, 19}, IntBQF{2, 1, 3}}) {
    RealBQF rq{RealBall::exact(q.A, 128), RealBall::exact(q.B, 128), RealBall::exact(q.C, 128)};
    auto rr = gauss_reduce_real(rq);
    CHECK(transform(q, rr.witness) == gauss_reduce(q).form);
  }
}
