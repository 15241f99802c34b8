#include <doctest.h>

#include "schur/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schur::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gens output") {
  const Run a = run({"gens", "--type", "gl", "--n", "2", "--r", "2", "--q", "--reduced"});
  CHECK(a.code == 0);
  CHECK(a.out == "K1*K2 - v^2\n(K1 - 1)*(K1 - v)*(K1 - v^2)\n(K2 - 1)*(K2 - v)*(K2 - v^2)\n");
  const Run c = run({"gens", "--type", "gl", "--n", "3", "--r", "1", "--classical", "--reduced"});
  CHECK(c.code == 0);
  CHECK(c.out == "H1 + H2 + H3 - 1\nH1*(H1 - 1)\nH2*(H2 - 1)\nH3*(H3 - 1)\n");
}

TEST_CASE("dim and saturate") {
  CHECK(run({"dim", "--type", "gl", "--n", "2", "--r", "2"}).out == "10\n");
  const Run s = run({"saturate", "--type", "gl", "--n", "2", "--weights", "(2,0)"});
  CHECK(s.code == 0);
  CHECK(s.out.find("(1,1) (2,0)") != std::string::npos);
}

TEST_CASE("JSON output parses") {
  const Run d = run({"dim", "--type", "gl", "--n", "2", "--r", "2", "--json"});
  REQUIRE(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["dim"] == "10");
  CHECK(j["pi"].size() == 2);
  const Run o = run({"orbit", "--type", "gl", "--n", "2", "--weight", "(1,0)", "--json"});
  CHECK(nlohmann::json::parse(o.out) == nlohmann::json::parse("[[0,1],[1,0]]"));
  const Run g = run({"gens", "--type", "C", "--n", "2", "--r", "2", "--json"});
  CHECK(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["generators"].size() == 4);
  const Run v = run({"verify", "--type", "C", "--n", "2", "--r", "2", "--json"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["passed"] == true);
}

TEST_CASE("verification commands") {
  CHECK(run({"verify", "--type", "gl", "--n", "2", "--r", "2"}).code == 0);
  CHECK(run({"verify", "--type", "B", "--n", "2", "--r", "2", "--module", "spin", "--classical"}).code == 0);
  CHECK(run({"oracle", "--type", "gl", "--n", "2", "--r", "2"}).code == 0);
  CHECK(run({"spin", "--n", "2", "--rmax", "3"}).code == 0);
  const Run conj = run({"conjecture", "--type", "B", "--n", "2", "--rmax", "2"});
  CHECK(conj.code == 0);
  CHECK(conj.out.find("first non-saturated power: r=1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"gens", "--type", "gl"}).code == 2);
  CHECK(run({"gens", "--type", "Q", "--n", "2", "--r", "1"}).code == 2);
  CHECK(run({"orbit", "--type", "gl", "--n", "2", "--weight", "(1,x)"}).code == 2);
  CHECK(run({"gens", "--type", "B", "--n", "2", "--r", "1", "--basis", "epsilon", "--q"}).code == 2);
  // a box too small to hold W pi makes the zero-set check fail
  const Run small = run({"verify", "--type", "gl", "--n", "2", "--r", "2", "--radius", "1"});
  CHECK(small.code == 1);
  CHECK(small.out.find("some checks failed") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"present", "--type", "C", "--n", "2", "--r", "2", "--json"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
