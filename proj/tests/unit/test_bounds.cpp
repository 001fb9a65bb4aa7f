#include <doctest.h>

#include "polydisc/bounds.hpp"
#include "polydisc/errors.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("quadratic and cubic bound values") {
  CHECK(bound_quadratic_height(-23, false).value() == doctest::Approx(23.0 / 3));
  CHECK(bound_quadratic_height(21, false).value() == doctest::Approx(21.0 / 4));
  CHECK(bound_quadratic_height(25, true).value() == doctest::Approx(5.0));
  CHECK(bound_monic_quadratic_height(-4).value() == doctest::Approx(2.0));
  CHECK(bound_cubic_height(-108, false).value() == doctest::Approx(64.0 / 27 * std::sqrt(108.0)));
  CHECK(bound_cubic_height(49, true).value() == doctest::Approx(64.0 / (3 * std::sqrt(3.0)) * 49));
  CHECK_THROWS_AS(bound_quadratic_height(0, false), DomainError);
}

TEST_CASE("large bounds agree with the logarithmic route") {
  for (int n = 2; n <= 6; ++n)
    for (long d : {1L, 2L, 3L, 49L, 1000L}) {
      CHECK(oracle::monic_z_bound_rel_error(n, d, bound_monic_equivalence_height(n, d).log10_bound.get()) <= 1e-12);
      CHECK(oracle::gl2_bound_rel_error(n, d, bound_gl2_equivalence_height(n, d).log10_bound.get()) <= 1e-12);
    }
  CHECK(bound_monic_equivalence_height(3, 2).log_clamped);
  CHECK_FALSE(bound_monic_equivalence_height(3, 3).log_clamped);
}

TEST_CASE("maximal degree for a discriminant") {
  CHECK(max_degree_for_discriminant(49, false) == 10);
  CHECK(max_degree_for_discriminant(49, true) == 9);
  CHECK(max_degree_for_discriminant(1, false) == 3);
  // 3^k <= D^2 is decided exactly at the powers of three
  CHECK(max_degree_for_discriminant(3, true) == 4);
  CHECK(max_degree_for_discriminant(9, true) == 6);
  CHECK_THROWS_AS(max_degree_for_discriminant(0, true), DomainError);
}
