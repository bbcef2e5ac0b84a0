#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "biell/cli.hpp"
#include "biell/json_io.hpp"

using namespace biell;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("vector literals round-trip") {
  for (const char* text : {"1,3,2,6", "2,-3,2,0", "-1,0,0,7"}) {
    MukaiVector v = parse_mukai_vector(text);
    CHECK(format_mukai_vector(v) == text);
    CHECK(parse_mukai_vector(format_mukai_vector(v)) == v);
  }
  CHECK(format_num_class(parse_num_class("-4,9")) == "-4,9");
  CHECK_THROWS_AS(parse_mukai_vector("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_num_class("a,b"), std::invalid_argument);
}

TEST_CASE("chi command") {
  auto r = invoke({"chi", "--v", "1,3,2,6"});
  CHECK(r.exit_code == 0);
  json env = json::parse(r.out);
  CHECK(env["ok"] == true);
  CHECK(env["result"]["chi"] == 6);
  CHECK(!env["citations"].empty());
}

TEST_CASE("surface command matches the invariant record") {
  auto r = invoke({"surface", "--type", "4"});
  CHECK(r.exit_code == 0);
  json env = json::parse(r.out);
  CHECK(env["result"]["group_order"] == 8);
  CHECK(env["result"]["canonical_order"] == 4);
  CHECK(env["result"]["lambda"] == 2);
  CHECK(env["result"]["multiplicities"] == json::array({2, 4, 4}));
  CHECK(env["result"]["torsion_order"] == 1);
}

TEST_CASE("verdict envelopes carry citations") {
  auto decide = invoke({"ulrich", "decide", "--type", "6", "--r", "2", "--k", "2"});
  CHECK(decide.exit_code == 0);
  json env = json::parse(decide.out);
  CHECK(env["result"]["status"] == "NOT_EXISTS");
  CHECK(!env["citations"].empty());

  auto wbn = invoke({"wbn", "--type", "6", "--class", "0,3"});
  json wbn_env = json::parse(wbn.out);
  CHECK(wbn_env["result"]["moduli_status"] == "FAILS");
  CHECK(!wbn_env["citations"].empty());

  auto unknown = invoke({"ulrich", "decide", "--type", "6", "--r", "3", "--k", "4"});
  json unknown_env = json::parse(unknown.out);
  CHECK(unknown_env["result"]["status"] == "UNKNOWN");
  CHECK(!unknown_env["warnings"].empty());
}

TEST_CASE("wbn report shape") {
  auto r = invoke({"wbn", "--type", "5", "--class", "0,4"});
  json env = json::parse(r.out);
  const json& rep = env["result"];
  CHECK(rep["class"] == json::array({0, 4}));
  CHECK(rep["type"] == 5);
  REQUIRE(rep["components"].size() == 3);
  CHECK(rep["components"][0]["index"] == 0);
  CHECK(rep["components"][0]["h"] == json::array({4, 4, 0}));
  CHECK(rep["components"][0]["status"] == "FAILS");
  CHECK(rep["components"][1]["h"] == json::array({0, 0, 0}));
  CHECK(rep["components"][1]["status"] == "SATISFIED");
  CHECK(rep["moduli_status"] == "SATISFIED");
  CHECK(rep.contains("citation"));
}

TEST_CASE("walls output") {
  auto r = invoke({"walls", "--v", "2,1,1,0"});
  json env = json::parse(r.out);
  REQUIRE(env["result"]["walls"].size() == 1);
  CHECK(env["result"]["walls"][0]["xi"] == json::array({1, -1}));
  CHECK(env["result"]["walls"][0]["ample_direction"] == json::array({1, 1}));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"nope"}).exit_code == 2);
  CHECK(invoke({"chi"}).exit_code == 2);                       // missing --v
  CHECK(invoke({"chi", "--v", "1,2"}).exit_code == 2);         // malformed literal
  CHECK(invoke({"surface", "--type", "9"}).exit_code == 1);    // out of range
  CHECK(invoke({"components", "--v", "2,3,2,1", "--type", "3"}).exit_code == 1);
  auto bad = invoke({"components", "--v", "2,3,2,1", "--type", "3"});
  json env = json::parse(bad.out);
  CHECK(env["ok"] == false);
  CHECK(env["result"]["error"].get<std::string>().find("gcd") != std::string::npos);
}

TEST_CASE("byte-identical repeated invocations") {
  const std::vector<std::vector<std::string>> commands = {
      {"chi", "--v", "1,3,2,6"},
      {"surface", "--type", "4"},
      {"ulrich", "decide", "--type", "7", "--r", "5", "--k", "8"},
      {"ulrich", "enumerate", "--H", "2,3", "--rank", "4"},
      {"wbn", "--type", "2", "--class", "0,6"},
      {"walls", "--v", "2,2,1,0"},
      {"irr", "--type", "6", "--certificate", "--minimality"},
  };
  for (const auto& cmd : commands) {
    auto first = invoke(cmd);
    auto second = invoke(cmd);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("frozen envelopes") {
  auto chi = invoke({"chi", "--v", "1,3,2,6"});
  CHECK(chi.out == R"({
  "ok": true,
  "result": {
    "chi": 6
  },
  "citations": [
    "riemann-roch-chi"
  ],
  "warnings": []
}
)");

  auto generic = invoke({"generic", "--H", "1,2", "--v", "2,1,1,0"});
  CHECK(generic.out == R"({
  "ok": true,
  "result": {
    "generic": true
  },
  "citations": [
    "generic-polarization-definition"
  ],
  "warnings": []
}
)");
}

TEST_CASE("table format") {
  auto r = invoke({"surface", "--type", "4", "--format", "table"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("group_order") != std::string::npos);
  CHECK(r.out.find("8") != std::string::npos);
  CHECK(r.out.find("citations:") != std::string::npos);
}

TEST_CASE("hypothesis checking through --H") {
  // b < lambda_S for type 6.
  CHECK(invoke({"ulrich", "decide", "--type", "6", "--r", "2", "--k", "3", "--H", "1,1"})
            .exit_code == 1);
  auto ok = invoke({"ulrich", "decide", "--type", "6", "--r", "2", "--k", "3", "--H", "1,3"});
  CHECK(ok.exit_code == 0);
  // (1,3) sits on the candidate wall (1,-3) for the k = 3 vector, which is
  // reported as an uncertified-genericity warning, not an error.
  json env = json::parse(ok.out);
  CHECK(!env["warnings"].empty());
  // k = 2r is isotropic, so there are no candidate walls at all.
  auto edge = invoke({"ulrich", "decide", "--type", "6", "--r", "2", "--k", "4", "--H", "1,3"});
  json edge_env = json::parse(edge.out);
  CHECK(edge_env["warnings"].empty());
  // Divisible polarization violates primitivity.
  CHECK(invoke({"ulrich", "decide", "--type", "1", "--r", "2", "--k", "3", "--H", "2,2"})
            .exit_code == 1);
}

TEST_CASE("irr certificate JSON mirrors the check names") {
  auto r = invoke({"irr", "--type", "3", "--certificate"});
  json env = json::parse(r.out);
  const json& cert = env["result"]["certificate"];
  CHECK(cert["D"] == json::array({3, 2}));
  CHECK(cert["v"] == json({{"r", 2}, {"c1", {3, 2}}, {"s", 3}}));
  for (const char* name : {"D_squared_is_12", "v_isotropic", "chi_is_3", "l_v_is_1",
                           "D12_primitive"})
    CHECK(cert["checks"][name] == true);
  CHECK(cert["checks"].contains("h2_vanishes_reason"));
  CHECK(cert["degree_bound"] == 3);
}

TEST_CASE("nonempty rejects a polarization on a wall") {
  auto r = invoke({"nonempty", "--v", "2,1,1,0", "--H", "1,1", "--type", "1"});
  CHECK(r.exit_code == 1);
  json env = json::parse(r.out);
  CHECK(env["result"]["error"].get<std::string>().find("wall") != std::string::npos);
}

TEST_CASE("pullback rejects unknown cover names") {
  CHECK(invoke({"pullback", "--type", "5", "--v", "1,1,1,1", "--cover", "split"}).exit_code == 1);
  CHECK(invoke({"pullback", "--type", "5", "--v", "1,1,1,1", "--cover", "quotient-2"}).exit_code ==
        1);
}

TEST_CASE("enumerate warns when the polarization misses the rank hypothesis") {
  auto r = invoke({"ulrich", "enumerate", "--H", "1,2", "--rank", "2", "--type", "6"});
  CHECK(r.exit_code == 0);
  json env = json::parse(r.out);
  CHECK(!env["warnings"].empty());
  auto ok = invoke({"ulrich", "enumerate", "--H", "1,3", "--rank", "2", "--type", "6"});
  CHECK(json::parse(ok.out)["warnings"].empty());
}

TEST_CASE("walls command reports the truncation cap") {
  auto r = invoke({"walls", "--v", "2,2,1,0", "--box", "1"});
  json env = json::parse(r.out);
  CHECK(env["result"]["walls"].size() == 1);
  CHECK(!env["warnings"].empty());
}

TEST_CASE("selftest filters suites") {
  auto r = invoke({"selftest", "--suite", "surfaces"});
  CHECK(r.exit_code == 0);
  json env = json::parse(r.out);
  REQUIRE(env["result"]["suites"].size() == 1);
  CHECK(env["result"]["suites"][0]["name"] == "surfaces");
  CHECK(env["result"]["suites"][0]["status"] == "PASS");
  CHECK(invoke({"selftest", "--suite", "nope"}).exit_code == 1);
}

}  // TEST_SUITE
