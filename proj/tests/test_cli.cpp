#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "simbasis/errors.hpp"
#include "simbasis/report.hpp"

using namespace simbasis;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  json doc;
};

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "simbasis_cli_tests";
  fs::create_directories(dir);
  const fs::path file = dir / name;
  std::ofstream(file) << text;
  return file;
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SIMBASIS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.doc = json::parse(r.out);  // throws if the output is not one JSON document
  return r;
}

const char* kQuad = R"({"dim": 2, "points": [["0","0"], ["4","0"], ["5","3"], ["1","4"]]})";
const char* kTriangle = R"({"dim": 2, "points": [[0, 0], [4, 0], [0, 4]]})";

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("config parsing") {
    const auto c = parse_config_text(R"({"dim": 2, "points": [["1/2", "3"], [0, 1], ["-2", "7/3"]]})");
    CHECK(c.size() == 3);
    CHECK(c.at(1) == Point{Rational(1, 2), 3});
    CHECK(c.at(3) == Point{-2, Rational(7, 3)});
    CHECK_THROWS_AS(parse_config_text("{"), InputError);
    CHECK_THROWS_AS(parse_config_text(R"({"points": []})"), InputError);
    CHECK_THROWS_AS(parse_config_text(R"({"dim": 2, "points": [[0.5, 0], [1, 0], [0, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_config_text(R"({"dim": 2, "points": [["1/0", 0], [1, 0], [0, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_config_text(R"({"dim": 2, "points": [[0, 0], [1, 0], [0]]})"), InputError);
  }

  TEST_CASE("label lists") {
    CHECK(parse_label_list("1,5,3") == std::vector<Label>{1, 5, 3});
    CHECK_THROWS_AS(parse_label_list("1,,3"), InputError);
    CHECK_THROWS_AS(parse_label_list("a"), InputError);
    CHECK(parse_rational_list("1,-2/3") == RationalVector{1, Rational(-2, 3)});
  }

  TEST_CASE("sha256 test vector") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("matrix on the quadrilateral is 4 x 4") {
    const auto file = write_config("quad.json", kQuad);
    const auto r = run("matrix " + file.string());
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["shape"] == json::array({4, 4}));
    CHECK(r.doc["result"]["rows"].size() == 4);
    CHECK(r.doc["tool"]["version"] == std::string(kToolVersion));
    CHECK(r.doc["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
  }

  TEST_CASE("verify on a single simplex") {
    const auto file = write_config("tri.json", kTriangle);
    const auto r = run("verify " + file.string());
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["certificate"]["size"] == 1);
    CHECK(r.doc["result"]["certificate"]["ok"] == true);
    CHECK(r.doc["result"]["rank_report"]["rank_A"] == 1);
  }

  TEST_CASE("express: basis simplex takes zero steps, the other one step") {
    const auto file = write_config("quad.json", kQuad);
    auto r = run("express " + file.string() + " --simplex 1,2,3");
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["steps"].empty());
    r = run("express " + file.string() + " --simplex 4,2,1");
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["length"] == 1);
    CHECK(r.doc["result"]["verified"] == true);
  }

  TEST_CASE("relation") {
    const auto file = write_config("quad.json", kQuad);
    const auto r = run("relation " + file.string() + " --simplex 1,2,3 --point 4");
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["minus"] == json::array({json::array({1, 3, 4})}));
  }

  TEST_CASE("order, chambers, basis and flags") {
    const auto file = write_config("quad.json", kQuad);
    auto r = run("order " + file.string());
    CHECK(r.doc["result"]["permutation"] == json::array({1, 2, 4, 3}));
    r = run("order " + file.string() + " --seed-direction 1,-1");
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["permutation"] == json::array({4, 1, 3, 2}));
    r = run("chambers " + file.string());
    CHECK(r.doc["result"]["count"] == 4);
    r = run("basis " + file.string() + " --tie-break reverse-lex");
    CHECK(r.status == 0);
    CHECK(r.doc["result"]["size"] == 3);
  }

  TEST_CASE("identical input gives byte-identical output") {
    const auto file = write_config("quad.json", kQuad);
    for (const char* cmd : {"order", "chambers", "matrix", "basis", "verify"}) {
      CHECK(run(std::string(cmd) + " " + file.string()).out == run(std::string(cmd) + " " + file.string()).out);
    }
  }

  TEST_CASE("input errors exit 1 with a JSON error and no result") {
    const auto dup = write_config("dup.json", R"({"dim": 2, "points": [[0, 0], [1, 0], [0, 0], [0, 1]]})");
    const auto flat = write_config("flat.json", R"({"dim": 2, "points": [[0, 0], [1, 1], [2, 2]]})");
    const auto bad = write_config("bad.json", R"({"dim": 2, "points": [["1/x", 0], [1, 0], [0, 1]]})");
    const auto quad = write_config("quad.json", kQuad);
    const std::vector<std::string> cases{
        "basis " + dup.string(),
        "basis " + flat.string(),
        "verify " + bad.string(),
        "basis /nonexistent.json",
        "express " + quad.string() + " --simplex 1,2,9",
        "express " + quad.string() + " --simplex 1,2",
        "relation " + quad.string() + " --simplex 1,2,3 --point 3",
        "order " + quad.string() + " --seed-direction 1,1,1",
        "basis " + quad.string() + " --tie-break middle",
        "frobnicate",
    };
    for (const auto& args : cases) {
      CAPTURE(args);
      const auto r = run(args);
      CHECK(r.status == 1);
      CHECK(r.doc.contains("error"));
      CHECK_FALSE(r.doc.contains("result"));
    }
  }

  TEST_CASE("a budget that is too small is a verification failure") {
    const auto file = write_config("quad.json", kQuad);
    const auto r = run("express " + file.string() + " --simplex 1,2,4 --max-steps 0");
    CHECK(r.status == 2);
    CHECK(r.doc["error"]["kind"] == "verification");
  }
}
