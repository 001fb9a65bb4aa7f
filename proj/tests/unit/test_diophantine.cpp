#include <doctest.h>

#include "polydisc/diophantine.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/errors.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("index and discriminant forms of a pure cubic") {
  NumberField K(parse_poly("x^3 - 2"));
  IndexForm idx = index_form(K, invariant_order(K));
  CHECK(idx.form.to_string() == "x1^3 - 2*x2^3");
  CHECK(idx.discriminant_form == idx.form * idx.form * Rational(-108));
  // brute check of D(x a + y a^2) on a few points
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      NFElement e = nf_from_poly(K, {Rational(0), Rational(x), Rational(y)});
      CHECK(element_discriminant(K, e) == idx.discriminant_form.eval(std::vector<Rational>{x, y}));
    }
}

TEST_CASE("quadratic order") {
  NumberField K(parse_poly("x^2 - 2"));
  IndexForm idx = index_form(K, invariant_order(K));
  CHECK(idx.form.to_string() == "x1");
  CHECK(idx.discriminant_form.to_string() == "8*x1^2");
  CHECK(generators_of_order(K, idx, 50).classes.size() == 1);
}

TEST_CASE("Thue equation in a box") {
  BoxSolutions s = thue_solve_bounded(parse_poly("x^3 - 2"), 1, 100);
  CHECK(s.solutions == std::vector<std::vector<Integer>>{{-1, -1}, {1, 0}});
  CHECK_FALSE(s.touches_boundary);
  BoxSolutions t = thue_solve_bounded(parse_poly("x^2 - 2"), -1, 10);  // Pell: x^2 - 2y^2 = -1
  for (auto& v : t.solutions) CHECK(v[0] * v[0] - 2 * v[1] * v[1] == -1);
  CHECK(t.solutions.size() == 8);  // (+-1,+-1), (+-7,+-5)
}

TEST_CASE("generators of the cyclic cubic order") {
  NumberField K(parse_poly("x^3 - x^2 - 2*x + 1"));
  IndexForm idx = index_form(K, invariant_order(K));
  GeneratorSearch g = generators_of_order(K, idx, 1000);
  CHECK(g.classes.size() == 9);
  for (auto& c : g.classes) {
    CHECK(power_module(K, c.element) == invariant_order(K).module);
    CHECK(discriminant(c.min_poly) == 49);
  }
  // a^2 = 2 - sigma(a) for a Galois conjugate sigma(a), so its minimal
  // polynomial is -f(2 - X): a Z-inequivalent generator, Z-equivalent polynomial.
  CHECK(parse_poly("x^3 - 5*x^2 + 6*x - 1") == -apply_gl2(K.poly(), Unimodular2{-1, 2, 0, 1, 1}));
  CHECK(z_equivalent(parse_poly("x^3 - x^2 - 2*x + 1"), parse_poly("x^3 - 5*x^2 + 6*x - 1")).has_value());
}

TEST_CASE("index form solver agrees with direct evaluation") {
  NumberField K(parse_poly("x^3 + x^2 - 3*x + 4"));
  IndexForm idx = index_form(K, invariant_order(K));
  BoxSolutions s = solve_index_form_bounded(idx, 1, 15);
  std::set<std::vector<Integer>> brute;
  for (long x = -15; x <= 15; ++x)
    for (long y = -15; y <= 15; ++y) {
      Integer v = idx.form.eval(std::vector<Integer>{x, y});
      if (abs(v) == 1) brute.insert({x, y});
    }
  CHECK(std::set<std::vector<Integer>>(s.solutions.begin(), s.solutions.end()) == brute);
}

TEST_CASE("degree limits") {
  NumberField K(parse_poly("x^5 - x - 1"));
  IndexForm idx = index_form(K, invariant_order(K));
  CHECK_THROWS_AS(solve_index_form_bounded(idx, 1, 2), UnsupportedDegree);
}

TEST_CASE("enumeration by discriminant") {
  auto e = enumerate_monic_by_discriminant(2, -4, 10);
  CHECK(e.classes == std::vector<IntPoly>{parse_poly("x^2 + 1")});
  auto f = enumerate_monic_by_discriminant(3, 49, 10);
  CHECK(f.classes.size() == 2);
  for (auto& p : f.classes) CHECK(discriminant(p) == 49);
  CHECK(f.max_degree == 9);
  try {
    enumerate_monic_by_discriminant(10, 49, 1);
    CHECK(false);
  } catch (const DomainError& ex) {
    CHECK(std::string(ex.what()).find("2 + 2 log|D| / log 3") != std::string::npos);
  }
}
