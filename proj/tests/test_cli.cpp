#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourprod/cli.hpp"
#include "fourprod/core.hpp"

#include <json.hpp>

#include <sstream>

using namespace fourprod;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("solve golden instance with all methods, json") {
  auto r = invoke({"solve", "--a", "9", "--b", "16", "--c", "21", "--d", "24", "--method",
                   "all", "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["instance"]["a"] == 9);
  CHECK(doc["instance"]["d"] == 24);
  bool found = false;
  for (const auto& s : doc["solutions"]) {
    Quadruple q{{s["v"][0], s["v"][1]},
                {s["x"][0], s["x"][1]},
                {s["y"][0], s["y"][1]},
                {s["z"][0], s["z"][1]}};
    CHECK(s["residual"].get<double>() <= 1e-9);
    if (quad_distance(q, Quadruple{1, 2, 3, 4}) <= 1e-6) found = true;
  }
  CHECK(found);
}

TEST_CASE("json output round-trips: re-verified residuals match the printed ones") {
  auto r = invoke({"solve", "--a", "9", "--b", "16", "--c", "21", "--d", "24", "--format",
                   "json"});
  json doc = json::parse(r.out);
  Instance inst{doc["instance"]["a"], doc["instance"]["b"], doc["instance"]["c"],
                doc["instance"]["d"]};
  REQUIRE(doc["solutions"].size() > 0);
  for (const auto& s : doc["solutions"]) {
    Quadruple q{{s["v"][0], s["v"][1]},
                {s["x"][0], s["x"][1]},
                {s["y"][0], s["y"][1]},
                {s["z"][0], s["z"][1]}};
    double recomputed = residual(q, inst);
    double printed = s["residual"].get<double>();
    CHECK(std::abs(recomputed - printed) <= 1e-12 + 1e-6 * printed);
  }
}

TEST_CASE("verify subcommand") {
  auto r = invoke({"verify", "--v", "1", "--x", "1", "--y", "1", "--z", "1", "--format",
                   "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["instance"]["a"] == 3);
  CHECK(doc["instance"]["b"] == 3);
  CHECK(doc["instance"]["c"] == 3);
  CHECK(doc["instance"]["d"] == 3);
  CHECK(doc["residual"] == 0);
}

TEST_CASE("rational inputs are accepted") {
  auto r = invoke({"verify", "--v", "1/2", "--x", "1/2", "--y", "1/2", "--z", "1/2",
                   "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["instance"]["a"] == 0.75);
  CHECK(doc["instance_exact"]["a"] == "3/4");
}

TEST_CASE("direct method on (100,1,1,1) exits 2") {
  auto r = invoke({"solve", "--a", "100", "--b", "1", "--c", "1", "--d", "1", "--method",
                   "direct"});
  CHECK(r.code == 2);
  CHECK(r.out.find("no real all-positive-branch solution") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(invoke({"solve", "--a", "9"}).code == 1);
  CHECK(invoke({"solve", "--a", "9", "--b", "1", "--c", "1", "--d", "1", "--method",
                "bogus"})
            .code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({"verify", "--v", "abc", "--x", "1", "--y", "1", "--z", "1"}).code == 1);
}

TEST_CASE("derive reports all tables in agreement") {
  auto r = invoke({"derive", "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["report"]["all_checks_passed"] == true);
  CHECK(doc["report"]["t_table"]["verdict"] == "equal");
  CHECK(doc["report"]["u_table"]["verdict"] == "equal");
  CHECK(doc["report"]["t_table"]["mismatched_cells"].empty());
}

TEST_CASE("selftest passes") {
  auto r = invoke({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("real-only filter keeps the golden solutions") {
  auto r = invoke({"solve", "--a", "9", "--b", "16", "--c", "21", "--d", "24", "--real-only",
                   "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  for (const auto& s : doc["solutions"]) {
    CHECK(std::abs(s["v"][1].get<double>()) <= 1e-6);
  }
}
