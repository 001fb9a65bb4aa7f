#include <doctest.h>

#include "polydisc/errors.hpp"
#include "polydisc/record.hpp"

using namespace polydisc;

TEST_CASE("record round trip") {
  Record r;
  r.add("type", "result").add("poly", "x^3 - 2").add("q", "a\"b\\c").add("nl", "x\ny\tz").add("eq", "a=b").add("empty", "");
  std::string line = serialize(r);
  CHECK(line == "type=result poly=\"x^3 - 2\" q=\"a\\\"b\\\\c\" nl=\"x\\ny\\tz\" eq=\"a=b\" empty=\"\"");
  Record back = parse_record(line);
  CHECK(back == r);
  CHECK(serialize(back) == line);
  REQUIRE(back.get("poly") != nullptr);
  CHECK(*back.get("poly") == "x^3 - 2");
  CHECK(back.get("missing") == nullptr);
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(parse_record("a=1 b"), ParseError);
  CHECK_THROWS_AS(parse_record("a=\"open"), ParseError);
  CHECK_THROWS_AS(parse_record("bad key=1"), ParseError);
  CHECK_THROWS_AS(Record().add("sp ace", "1"), DomainError);
}
