#include "cli.hpp"

#include "cayley/minuscule.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cayley::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("degrees") {
  Run r = run({"degrees"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s4pp: 45\n") != std::string::npos);
  CHECK(r.out.find("s4p: 33\n") != std::string::npos);
  CHECK(r.out.find("s16: 1\n") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 27);
}

TEST_CASE("multiply with both engines") {
  Run r = run({"multiply", "s4p", "s4p", "--engine", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "solver: s8 + s8p + s8pp\nborel: s8 + s8p + s8pp\n");
  CHECK(run({"multiply", "h", "s1"}).out == "s2\n");
}

TEST_CASE("the engines agree on every pair") {
  const auto names = cayley::cayley_plane_diagram().names();
  int disagreements = 0;
  for (const auto& a : names)
    for (const auto& b : names) {
      Run r = run({"multiply", a, b, "--engine", "both", "--format", "json"});
      REQUIRE(r.code != 2);
      if (r.code != 0) ++disagreements;
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["products"]["solver"] == j["products"]["borel"]);
    }
  CHECK(disagreements == 0);
}

TEST_CASE("unknown names exit with 2 and list the valid ones") {
  Run r = run({"multiply", "s4", "s1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("'s4'") != std::string::npos);
  CHECK(r.err.find("s4p s4pp") != std::string::npos);
  CHECK(r.err.find(" h") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"hasse", "--space", "g2"}).code == 1);
  CHECK(run({"multiply", "s1"}).code == 1);
  CHECK(run({"degrees", "--help"}).code == 0);
}

TEST_CASE("deg-y8") {
  CHECK(run({"deg-y8"}).out == "1047361761\n");
  CHECK(run({"deg-y8", "--format", "json"}).out == "{\n  \"deg_y8\": \"1047361761\"\n}\n");
}

TEST_CASE("DOT output") {
  Run r = run({"hasse", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph OP2 {", 0) == 0);
  CHECK(r.out.find("w4_1 [label=\"s4pp\\n45\"];") != std::string::npos);
  CHECK(r.out.find("w0_0 -> w1_0 [label=\"6\"];") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '>') == 36);
}

TEST_CASE("identical inputs give identical bytes") {
  for (std::vector<std::string> args : {std::vector<std::string>{"table"},
                                        {"hasse", "--format", "json"},
                                        {"segre", "--format", "json"},
                                        {"invariants"},
                                        {"jordan-selftest", "--seed", "7", "--samples", "50"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"jordan-selftest", "--seed", "7", "--samples", "50"}).out.rfind("seed 7\n", 0) == 0);
}

TEST_CASE("JSON round trip") {
  for (std::vector<std::string> args : {std::vector<std::string>{"roots"},
                                        {"table"},
                                        {"hasse", "--space", "s10", "--format", "json"},
                                        {"chern", "--projected", "--format", "json"},
                                        {"degrees", "--format", "json"}}) {
    std::string text = run(args).out;
    CHECK(nlohmann::json::parse(text).dump(2) + "\n" == text);
  }
}

TEST_CASE("table contents") {
  auto j = nlohmann::json::parse(run({"table"}).out);
  CHECK(j["names"].size() == 27);
  CHECK(j["products"].size() == 27);
  CHECK(j["products"]["s4p"]["s4pp"] == nlohmann::json{{"s8p", "2"}, {"s8pp", "1"}});
  CHECK(j["products"]["s8"]["s8"] == nlohmann::json{{"s16", "1"}});
  CHECK(j["products"]["s9p"]["s9p"] == nlohmann::json::object());
}
