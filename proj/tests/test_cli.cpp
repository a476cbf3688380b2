#include <doctest.h>

#include "printing.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tubes/cli.hpp"

using namespace tubes;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tubes");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("intersect") {
  const Run r = run({"intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--json"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["pos"] == 3);
  CHECK(j["neg"] == 4);
  CHECK(j["total"] == 7);
  CHECK_FALSE(j.contains("points"));

  const Run p = run({"intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--points", "--format", "json"});
  REQUIRE(p.code == kExitOk);
  const json pts = json::parse(p.out)["points"];
  CHECK(pts.size() == 7);
  CHECK(pts[0]["x"] == "111/25");
  CHECK(pts[0]["sign"] == 1);

  const Run text = run({"intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find('7') != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  const Run bad = run({"intersect", "--n", "4", "--arc", "0,1", "--arc", "3,17"});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("NotAdmissible") != std::string::npos);
  CHECK(run({"intersect", "--n", "4", "--arc", "0,26"}).code == kExitInputError);
  CHECK(run({"intersect", "--n", "0", "--arc", "0,3", "--arc", "0,3"}).code == kExitInputError);
  CHECK(run({"intersect", "--n", "4", "--arc", "zero,3", "--arc", "0,3"}).code == kExitInputError);
  CHECK(run({"bogus"}).code == kExitInputError);
  CHECK(run({"quiver", "--n", "5", "--max-len", "1"}).code == kExitInputError);
  CHECK(run({"ext", "--mod", "0,3", "--mod", "0,4"}).code == kExitInputError);
  CHECK(run({"check", "--n-max", "9"}).code == kExitInputError);
}

TEST_CASE("ext") {
  const Run r = run({"ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--json"});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["ext"] == 4);
  CHECK(json::parse(run({"ext", "--n", "4", "--mod", "3,17", "--mod", "0,26", "--json"}).out)["ext"] == 3);
  CHECK(json::parse(run({"ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--cluster", "--json"}).out)["ext"] ==
        7);
  CHECK(json::parse(run({"ext", "--infinity", "--mod", "1,5", "--mod", "0,3", "--json"}).out)["ext"] == 1);

  const Run explain = run({"ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--explain", "--json"});
  const json e = json::parse(explain.out)["explain"];
  CHECK(e["neg"] == 4);
  CHECK(e["equals"] == "neg");
}

TEST_CASE("quiver") {
  const Run dot = run({"quiver", "--n", "5", "--max-len", "5"});
  REQUIRE(dot.code == kExitOk);
  CHECK(dot.out.rfind("digraph tube {", 0) == 0);
  CHECK(dot.out == run({"quiver", "--n", "5", "--max-len", "5"}).out);

  const json j = json::parse(run({"quiver", "--n", "5", "--max-len", "5", "--format", "json"}).out);
  CHECK(j["vertices"].size() == 20);
  CHECK(j["arrows"].size() == 30);
  CHECK(j["tau"].size() == 20);

  const json one = json::parse(run({"quiver", "--n", "1", "--max-len", "4", "--json"}).out);
  CHECK(one["vertices"].size() == 3);

  const Run inf = run({"quiver", "--infinity", "--max-len", "4"});
  CHECK(inf.code == kExitOk);
  CHECK(inf.out.rfind("digraph za_infinity {", 0) == 0);
}

TEST_CASE("draw") {
  const Run r = run({"draw", "--n", "4", "--arc", "0,26", "--arc", "3,17"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("<svg", 0) == 0);
  const std::string path = "tubes_cli_test_draw.svg";
  const Run f = run({"draw", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--view", "annulus", "-o", path});
  REQUIRE(f.code == kExitOk);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().rfind("<svg", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"draw", "--n", "4", "--arc", "0,26", "--view", "sideways"}).code == kExitInputError);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", "--n", "5", "--mod", "0,7", "--mod", "0,7", "--json"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["hom"] == 2);
  CHECK(j["dims1"] == json::array({1, 2, 1, 1, 1}));
  CHECK(j["ext_ar"] == j["ext_euler"]);
}

TEST_CASE("check") {
  const Run r = run({"check", "--n-max", "3", "--len-max", "8", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["ok"] == true);

  const Run flipped = run({"check", "--n-max", "2", "--len-max", "6", "--flip-signs"});
  CHECK(flipped.code == kExitCheckFailed);
  CHECK(flipped.out.find("anchor-rank4") != std::string::npos);
}
