#include "anharmonic/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace anharmonic;
using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json parsed(const Run& r) { return json::parse(r.out); }
} // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rspt", "--no-such-flag"}).code == 2);
  CHECK(run({"rspt", "--degree", "2"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("resonance-scan") != std::string::npos);
}

TEST_CASE("computation failures exit with 1 and JSON") {
  auto r = run({"width", "--degree", "3", "-g", "-0.1"});
  CHECK(r.code == 1);
  auto j = parsed(r);
  CHECK(j["error"]["type"] == "RegimeError");
  CHECK(j["config"]["g"] == "-0.1");

  auto f = run({"afun", "--degree", "5"});
  CHECK(f.code == 1);
  CHECK(parsed(f)["error"]["type"] == "FixtureError");
}

TEST_CASE("width-series and action") {
  auto r = run({"width-series", "--degree", "3", "--level", "1", "--order", "1"});
  REQUIRE(r.code == 0);
  auto j = parsed(r);
  CHECK(j["result"]["c"][1]["value"] == "-853/16");
  CHECK(j["result"]["c"][1]["provenance"] == "exact");

  auto a = parsed(run({"action", "--degree", "3"}));
  CHECK(a["result"]["rational"]["value"] == "2/15");
  CHECK(a["result"]["agreement_digits"].get<int>() >= 30);
  CHECK(a["result"]["quadrature"]["provenance"]["kind"] == "numeric");
}

TEST_CASE("rspt CSV and defaults") {
  auto r = run({"rspt", "--degree", "4", "--kmax", "2"});
  CHECK(r.out == "K,numerator,denominator\n0,1,2\n1,3,4\n2,-21,8\n");
  auto j = parsed(run({"rspt", "--degree", "4", "--format", "json"}));
  CHECK(j["result"]["kmax"] == 20);
}

TEST_CASE("identical configs give identical output apart from the timestamp") {
  auto strip = [](std::string s) {
    auto j = json::parse(s);
    j.erase("timestamp");
    return j.dump();
  };
  std::vector<std::string> args{"borel", "--degree", "4", "-g", "0.05", "--kmax", "20"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("TOML configuration mirrors the flags") {
  auto path = std::filesystem::temp_directory_path() / ("anharmonic-cli-" + std::to_string(::getpid()) + ".toml");
  std::ofstream(path) << "[width-series]\ndegree = 4\norder = 1\nprecision = 50\n";
  auto j = parsed(run({"--config", path.string(), "width-series"}));
  CHECK(j["config"]["degree"] == 4);
  CHECK(j["config"]["precision"] == 50);
  CHECK(j["result"]["c"][1]["value"] == "-95/24");
  std::filesystem::remove(path);
}

TEST_CASE("check runs selected criteria") {
  auto r = run({"check", "--criterion", "1", "--criterion", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS   1") != std::string::npos);
  CHECK(r.out.find("2/2 criteria passed") != std::string::npos);
}
