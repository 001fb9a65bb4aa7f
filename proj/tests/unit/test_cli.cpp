#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "polydisc/record.hpp"

using polydisc::parse_record;
using polydisc::Record;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polydisc");
  std::ostringstream out, err;
  int code = polydisc::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Record> records(const std::string& text) {
  std::vector<Record> r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) r.push_back(parse_record(line));
  return r;
}

}  // namespace

TEST_CASE("disc prints the discriminant") {
  Run r = run({"disc", "x^3 - x^2 - 2*x + 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disc = 49") != std::string::npos);
  Run s = run({"--format", "structured", "disc", "[1,-2,-1,1]"});
  auto recs = records(s.out);
  REQUIRE(recs.size() == 2);
  CHECK(*recs[0].get("type") == "config");
  CHECK(*recs[1].get("disc") == "49");
}

TEST_CASE("structured output round-trips byte for byte") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--format", "structured", "reduce", "x^2 + 6*x + 10"},
           {"--format", "structured", "mm", "x^3 - x^2 - 2*x + 1", "--box", "50"},
           {"--format", "structured", "hermite-form", "x^3 - 2"},
           {"--format", "structured", "cns", "--base", "x^2 + 2*x + 2"}}) {
    Run r = run(args);
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) CHECK(polydisc::serialize(parse_record(line)) == line);
  }
}

TEST_CASE("reduce reports witness and bound") {
  Run r = run({"--format", "structured", "reduce", "x^2 + 6*x + 10"});
  auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(*recs[1].get("g") == "x^2 + 1");
  CHECK(*recs[1].get("witness") == "[[1,-3],[0,1]],1");
  CHECK(*recs[1].get("bound_holds") == "true");
  CHECK(recs[1].get("bound.log10") != nullptr);
}

TEST_CASE("mm with completeness flag") {
  Run r = run({"--format", "structured", "mm", "x^3 - x^2 - 2*x + 1", "--box", "1000"});
  CHECK(r.code == 0);
  auto recs = records(r.out);
  CHECK(*recs[0].get("box") == "1000");
  CHECK(*recs[1].get("mm") == "9");
  CHECK(*recs[1].get("box_limited") == "true");
  CHECK(recs.size() == 11);
}

TEST_CASE("exit codes") {
  CHECK(run({"disc", "x^^2"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"reduce", "x^2 + 2*x + 1"}).code == 2);
  CHECK(run({"enumerate", "--degree", "11", "--disc", "49"}).code == 2);
  CHECK(run({"equiv", "--gl2", "--bound", "1", "x^3 - 2", "x^3 + 6*x^2 + 12*x + 6"}).code == 3);
  CHECK(run({"equiv", "--gl2", "--bound", "1", "x^3 - 2", "x^3 + 3*x^2 + 3*x - 1"}).code == 0);
  CHECK(run({"cns", "--base", "x^2 + 2*x + 2", "--cap", "3"}).code == 3);
  CHECK(run({"cns", "--base", "x - 2"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bounds and outputs are reproducible") {
  Run a = run({"--format", "structured", "bounds", "--kind", "gl2", "--disc", "49", "--degree", "3"});
  Run b = run({"--format", "structured", "bounds", "--kind", "gl2", "--disc", "49", "--degree", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run m = run({"bounds", "--kind", "max-degree", "--disc", "49"});
  CHECK(m.out.find("max_degree = 10") != std::string::npos);
}

TEST_CASE("other subcommands run") {
  CHECK(run({"height", "x^3 - 20"}).code == 0);
  CHECK(run({"factor", "x^4 - 1"}).code == 0);
  CHECK(run({"equiv", "--z", "x^3 - 2", "x^3 + 3*x^2 + 3*x - 1"}).out.find("equivalent = true") != std::string::npos);
  CHECK(run({"hermite-equiv", "x^2 + 1", "x^2 + 2"}).out.find("reason = discriminant") != std::string::npos);
  CHECK(run({"order", "2*x^3 + x - 1", "--invariant"}).code == 0);
  CHECK(run({"order", "2*x^3 + x - 1"}).out.find("disc = -116") != std::string::npos);
  CHECK(run({"ideal", "2*x^3 + x - 1"}).code == 0);
  CHECK(run({"indexform", "x^3 - 2", "--value", "1", "--box", "10"}).code == 0);
  CHECK(run({"discform", "x^3 - 2"}).code == 0);
  CHECK(run({"thue", "x^3 - 2", "1", "--box", "50"}).out.find("solutions = 2") != std::string::npos);
  CHECK(run({"enumerate", "--degree", "3", "--disc", "49", "--cap", "10"}).out.find("classes = 2") != std::string::npos);
  CHECK(run({"cns", "--base", "x + 2", "--expand", "3"}).out.find("digits = [1,1,1]") != std::string::npos);
  CHECK(run({"reduce", "7*x^3 + 30*x^2 - 17*x + 2"}).out.find("g = 2*x^3 + 5*x^2 - 14*x - 15") != std::string::npos);
}
