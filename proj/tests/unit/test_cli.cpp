#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ratioopt/cli.hpp"

using ratioopt::cli::run;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("table csv") {
  const auto r = call({"table", "--gmax", "3", "--pmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3,0,5,5,exact") != std::string::npos);
}

TEST_CASE("report json") {
  const auto r = call({"report", "--word", "abAB", "--genus", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "report");
  CHECK(j["all_bounds_satisfied"] == true);
  CHECK(j["reports"][0]["word"] == "abAB");
}

TEST_CASE("enumerate is deterministic") {
  const auto a = call({"enumerate", "--count", "8", "--format", "json"});
  const auto b = call({"enumerate", "--count", "8", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("families") {
  CHECK(call({"johnson", "--k", "2", "--genus", "2", "--gmax", "3", "--format", "json"}).code == 0);
  const auto p = call({"pointpush", "--genus", "2", "--gmax", "4", "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out).contains("C_P_max"));
}

TEST_CASE("usage errors") {
  auto r = call({});
  CHECK(r.code == 2);
  r = call({"report"});
  CHECK(r.code == 2);
  r = call({"report", "--word", "xyz"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  r = call({"table", "--format", "yaml"});
  CHECK(r.code == 2);
  r = call({"report", "--word", "ab", "--genus", "0", "--punctures", "3"});
  CHECK(r.code == 2);
  CHECK(call({"--help"}).code == 0);
}
