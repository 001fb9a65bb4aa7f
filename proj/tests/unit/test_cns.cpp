#include <doctest.h>

#include "polydisc/cns.hpp"
#include "polydisc/errors.hpp"
#include "test_util.hpp"

using namespace polydisc;

TEST_CASE("CNS verdicts") {
  CHECK(is_cns_base(make_cns_base(parse_poly("x + 2"))).verdict == CnsVerdict::IsCNS);
  CHECK(is_cns_base(make_cns_base(parse_poly("x - 2"))).verdict == CnsVerdict::NotCNS);
  CHECK(is_cns_base(make_cns_base(parse_poly("x^2 + 2*x + 2"))).verdict == CnsVerdict::IsCNS);
  CHECK(is_cns_base(make_cns_base(parse_poly("x^2 - 2*x + 2"))).verdict == CnsVerdict::NotCNS);
  CHECK(is_cns_base(make_cns_base(parse_poly("x^2 + 4*x + 5"))).verdict == CnsVerdict::IsCNS);
}

TEST_CASE("cycles are periodic orbits of the digit map") {
  CnsBase b = make_cns_base(parse_poly("x^2 - 2*x + 2"));
  CnsDecision d = is_cns_base(b);
  REQUIRE(d.verdict == CnsVerdict::NotCNS);
  REQUIRE_FALSE(d.cycle.empty());
  CnsVector z = d.cycle.front();
  for (std::size_t k = 0; k < d.cycle.size(); ++k) cns_step(b, z);
  CHECK(z == d.cycle.front());
}

TEST_CASE("expansions reconstruct") {
  CnsBase neg2 = make_cns_base(parse_poly("x + 2"));
  CnsExpansion e = cns_expand(neg2, {3});
  CHECK(e.terminated);
  CHECK(e.digits == std::vector<Integer>{1, 1, 1});
  CnsBase gi = make_cns_base(parse_poly("x^2 + 2*x + 2"));
  for (long a = -20; a <= 20; a += 3)
    for (long c = -20; c <= 20; c += 7) {
      CnsExpansion x = cns_expand(gi, {a, c});
      REQUIRE(x.terminated);
      CHECK(cns_reconstruct(gi, x.digits) == CnsVector{a, c});
      for (auto& d : x.digits) CHECK((d >= 0 && d < 2));
    }
}

TEST_CASE("invalid bases") {
  CHECK_THROWS_AS(make_cns_base(parse_poly("2*x + 3")), DomainError);
  CHECK_THROWS_AS(make_cns_base(parse_poly("x^2 + 1")), DomainError);
  CHECK(to_string(CnsVerdict::Inconclusive) == "inconclusive");
}
