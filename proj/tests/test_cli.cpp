#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torsionkit/cli.hpp"
#include "torsionkit/serialize.hpp"

using namespace torsionkit;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "torsionkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tap pretty output") {
    const auto r = run({"tap", "--p", "2", "--q", "3", "--n", "3", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out == "t^3 - 1\n");
    const auto sl2 = run({"tap", "--p", "2", "--q", "3", "--n", "2", "--format", "pretty"});
    CHECK(sl2.out == "-t^2 - 1\n");
    const auto factored = run({"tap", "--p", "3", "--q", "4", "--n", "3", "--component", "0", "--format",
                               "factored"});
    CHECK(factored.code == 0);
    CHECK(factored.out.find("t^") != std::string::npos);
  }

  TEST_CASE("tap JSON round trips") {
    const auto r = run({"tap", "--p", "2", "--q", "5", "--n", "3"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 6);
    for (const auto& rec : j) {
      const auto c = component_from_json(rec.at("component"));
      CHECK(laurent_from_json(rec.at("polynomial")) == tap_polynomial(c));
      CHECK(rec.at("expansion_sign") == expansion_sign(c));
    }
  }

  TEST_CASE("components listing") {
    const auto r = run({"components", "--p", "3", "--q", "4", "--n", "3", "--dim", "4"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("dim") == 4);
    const auto text = run({"components", "--p", "2", "--q", "3", "--n", "2", "--format", "pretty"});
    CHECK(text.out == "K(2,3) n=2 k=1 a={0,1} b={0,2}  dim 1\n");
  }

  TEST_CASE("torsion") {
    const auto r = run({"torsion", "--p", "2", "--q", "3", "--n", "2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j[0].at("torsion").at("value") == "N=12: 2");
    const auto adj = run({"torsion", "--p", "2", "--q", "3", "--n", "2", "--adjoint"});
    CHECK(Json::parse(adj.out)[0].at("torsion").at("value") == "N=6: 1/2");
    CHECK(run({"torsion", "--p", "2", "--q", "3", "--n", "3", "--adjoint"}).code == 2);
    CHECK(run({"torsion", "--p", "2", "--q", "3", "--n", "2", "--component", "5"}).code == 2);
  }

  TEST_CASE("seifert") {
    const std::string path = "cli_test_eigs.json";
    {
      std::ofstream f(path);
      f << R"({"fibers":[[{"order":4,"exp":1},{"order":4,"exp":3}]]})";
    }
    const auto r = run({"seifert", "--index", "0,1;(2,1)", "--n", "2", "--omega", "1", "--eigs", path});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("torsion").at("value") == "N=4: 2");
    CHECK(j.at("certificate").at("integral") == true);
    CHECK(run({"seifert", "--index", "0,1;(2,1)", "--n", "2", "--omega", "1"}).code == 2);
    CHECK(run({"seifert", "--index", "0,1;(2,1)", "--n", "2", "--omega", "1", "--eigs", "no-such-file"}).code == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("powersum") {
    const auto r = run({"powersum", "--p", "2", "--q", "5", "--m", "2", "--kind", "sl2-neg"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("brute_force") == "7/4");
    const auto curve = run({"powersum", "--p", "2", "--q", "3", "--m", "2", "--kind", "adj-neg", "--curve", "0,1"});
    CHECK(Json::parse(curve.out).at("closed_form") == "2/3");
    CHECK(run({"powersum", "--p", "2", "--q", "3", "--m", "2", "--kind", "sl2-neg", "--curve", "0,1"}).code == 2);
    CHECK(run({"powersum", "--p", "2", "--q", "3", "--m", "2", "--kind", "bogus"}).code == 2);
    const auto pretty = run({"powersum", "--p", "2", "--q", "3", "--m", "1", "--format", "pretty"});
    CHECK(pretty.out == "sl2-neg K(2,3) m=1: closed 1/2, brute 1/2, scale 4  PASS\n");
  }

  TEST_CASE("oracle output is deterministic") {
    const std::vector<std::string> args{"oracle", "--p", "2", "--q", "3", "--n", "3", "--trials", "3", "--seed", "42"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).at("passed") == true);
  }

  TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "sl2", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite sl2: ") != std::string::npos);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"tap", "--p", "2", "--q", "4", "--n", "3"}).code == 2);
    CHECK(run({"tap", "--p", "2", "--q", "3"}).code == 2);
    CHECK(run({"tap", "--p", "2", "--q", "3", "--n", "3", "--format", "xml"}).code == 2);
    const auto r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("output file") {
    const std::string path = "cli_test_out.json";
    CHECK(run({"--output", path, "tap", "--p", "2", "--q", "3", "--n", "2"}).code == 0);
    std::ifstream in(path);
    const Json j = Json::parse(in);
    CHECK(j.size() == 1);
    std::remove(path.c_str());
  }
}
