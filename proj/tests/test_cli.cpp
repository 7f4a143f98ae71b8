#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minaff/cli.hpp"
#include "minaff/json_io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "minaff");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = minaff::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string error_code(const Result& r) { return json::parse(r.err).at("error").get<std::string>(); }

}  // namespace

TEST_CASE("characters and dimensions") {
  const auto r = run({"char", "--type", "B3", "--lambda", "0,0,0"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"terms":[{"weight":[0,0,0],"mult":1}]})"));
  CHECK(json::parse(run({"dim", "--type", "D4", "--lambda", "0,0,1,1"}).out).at("dim") == 56);
  CHECK(run({"char", "--type", "A1", "--lambda", "2", "--format", "csv"}).out == "weight,mult\n\"-2\",1\n\"0\",1\n\"2\",1\n");
  const auto big = json::parse(run({"dim", "--type", "D7", "--lambda", "9,9,9,9,9,9,9"}).out).at("dim");
  CHECK(big.is_string());
}

TEST_CASE("tensor products") {
  const auto r = run({"tensor", "--type", "D4", "--lambda", "0,0,1,0", "--mu", "0,0,0,1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) ==
        json::parse(R"({"constituents":[{"weight":[0,0,1,1],"mult":1},{"weight":[1,0,0,0],"mult":1}]})"));
  CHECK(run({"tensor", "--type", "A2", "--lambda", "1,0", "--mu", "0,1", "--format", "csv"}).out ==
        "weight,mult,dim\n\"0,0\",1,1\n\"1,1\",1,8\n");
}

TEST_CASE("graded characters") {
  const auto r = run({"graded", "--type", "B3", "--lambda", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"([{"grade":0,"constituents":[{"weight":[1,1,1],"mult":1}]},
                                              {"grade":1,"constituents":[{"weight":[1,0,1],"mult":1}]}])"));
  CHECK(run({"graded", "--type", "B3", "--lambda", "1,1,1", "--format", "csv"}).out ==
        "grade,weight,mult,dim\n0,\"1,1,1\",1,512\n1,\"1,0,1\",1,48\n");
  const auto bad = run({"graded", "--type", "B4", "--lambda", "0,0,0,3"});
  CHECK(bad.code == 2);
  CHECK(error_code(bad) == "UnsupportedSupport");
  CHECK(bad.out.empty());

  CHECK(run({"graded-mk", "--type", "D4", "--lambda", "1,0,1,1", "--k", "1"}).code == 0);
  CHECK(run({"graded-mk", "--type", "D4", "--lambda", "1,0,1,1", "--k", "2"}).code == 2);
  CHECK(json::parse(run({"spinpair", "--type", "D4", "--m3", "1", "--m4", "1"}).out).size() == 2);
  CHECK(json::parse(run({"kr", "--type", "D5", "--node", "3", "--m", "1"}).out) ==
        json::parse(R"([{"grade":0,"constituents":[{"weight":[0,0,1,0,0],"mult":1}]},
                        {"grade":1,"constituents":[{"weight":[1,0,0,0,0],"mult":1}]}])"));
  CHECK(error_code(run({"kr", "--type", "D5", "--node", "9", "--m", "1"})) == "IndexOutOfRange");
}

TEST_CASE("empty CSV tables keep their header") {
  const minaff::RootSystem b3(minaff::LieType{minaff::Series::B, 3});
  CHECK(minaff::io::graded_csv(b3, minaff::GradedCharacter()) == "grade,weight,mult,dim\n");
  CHECK(minaff::io::character_csv(minaff::Character()) == "weight,mult\n");
}

TEST_CASE("minimal affinizations") {
  auto r = run({"minaff", "construct", "--type", "B3", "--lambda", "1,1,1", "--eps", "+1", "--anchor", "0"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse("[[1,0,1],[2,6,1],[3,11,1]]"));
  r = run({"minaff", "check", "--type", "B3", "--lweight", "[[1,0,1],[2,6,1],[3,11,1]]"});
  CHECK(json::parse(r.out) == json::parse(R"({"minimal":true,"eps":1,"anchor":0})"));
  r = run({"minaff", "check", "--type", "A2", "--lweight", "[[1,0,1],[2,2,1]]"});
  CHECK(json::parse(r.out) == json::parse(R"({"minimal":false})"));
  r = run({"minaff", "construct", "--type", "D4", "--lambda", "1,1,1,1", "--k", "1"});
  CHECK(json::parse(r.out) == json::parse("[[1,0,1],[2,3,1],[3,6,1],[4,6,1]]"));
  r = run({"minaff", "check", "--type", "D4", "--lweight", "[[1,0,1],[2,3,1],[3,6,1],[4,6,1]]"});
  CHECK(json::parse(r.out) == json::parse(R"({"minimal":true,"eps":1,"anchor":0,"leg":1})"));
  CHECK(error_code(run({"minaff", "construct", "--type", "A2", "--lambda", "1,1", "--eps", "2"})) == "InvalidArgument");
  CHECK(error_code(run({"minaff", "check", "--type", "A2", "--lweight", "[[1,0]]"})) == "InvalidArgument");
  CHECK(error_code(run({"minaff", "check", "--type", "A2", "--lweight", "[[1,0,1"})) == "InvalidArgument");
}

TEST_CASE("l-weight operations") {
  CHECK(json::parse(run({"lweight", "sl2", "--s", "0", "--r", "1"}).out) == json::parse("[[[1,0,1]],[[1,2,-1]]]"));
  CHECK(json::parse(run({"lweight", "multiply", "--a", "[[1,0,1]]", "--b", "[[1,0,1],[2,1,-1]]"}).out) ==
        json::parse("[[1,0,2],[2,1,-1]]"));
  CHECK(json::parse(run({"lweight", "invert", "--a", "[[1,0,1]]"}).out) == json::parse("[[1,0,-1]]"));
  CHECK(json::parse(run({"lweight", "star", "--type", "A1", "--a", "[[1,1,1],[1,-1,1]]"}).out) ==
        json::parse("[[1,1,1],[1,3,1]]"));
  CHECK(json::parse(run({"lweight", "costar", "--type", "A1", "--a", "[[1,1,1],[1,-1,1]]"}).out) ==
        json::parse("[[1,-3,1],[1,-1,1]]"));
  CHECK(json::parse(run({"lweight", "wt", "--type", "A2", "--a", "[[1,0,1],[2,3,2]]"}).out) == json::parse("[1,2]"));
  CHECK(json::parse(run({"lweight", "qstring", "--type", "A3", "--node", "2", "--s", "0", "--r", "2"}).out) ==
        json::parse("[[2,-1,1],[2,1,1]]"));
  CHECK(json::parse(run({"lweight", "lroot", "--type", "A2", "--node", "1", "--s", "0"}).out) ==
        json::parse("[[1,0,1],[1,2,1],[2,1,-1]]"));
  CHECK(json::parse(run({"lweight", "leq", "--type", "A1", "--mu", "[[1,-1,1],[1,3,-1]]", "--lambda",
                         "[[1,1,1],[1,-1,1]]"})
                        .out) == json::parse(R"({"leq":true,"certificate":[[1,1,1]]})"));
  CHECK(json::parse(run({"lweight", "factorize", "--type", "A1", "--node", "1", "--a", "[[1,2,1],[1,0,2],[1,-2,1]]"})
                        .out) == json::parse(R"([{"s":0,"r":1},{"s":0,"r":3}])"));
  CHECK(json::parse(run({"lweight", "fm", "--type", "A1", "--node", "1", "--a", "[[1,0,1],[1,6,1]]"}).out) ==
        json::parse("[0,6]"));
  CHECK(error_code(run({"lweight", "leq", "--type", "A1", "--mu", "[[1,-40,1],[1,40,-1]]", "--lambda", "[]",
                        "--window", "3"})) == "WindowTooSmall");
}

TEST_CASE("validation errors") {
  CHECK(error_code(run({})) == "InvalidArgument");
  CHECK(error_code(run({"char", "--type", "E8", "--lambda", "1"})) == "UnsupportedType");
  CHECK(error_code(run({"char", "--type", "B3", "--lambda", "1,0"})) == "InvalidArgument");
  CHECK(error_code(run({"char", "--type", "B3", "--lambda", "1,-1,0"})) == "NotDominant");
  CHECK(error_code(run({"char", "--type", "B3", "--lambda", "1,x,0"})) == "InvalidArgument");
  CHECK(error_code(run({"char", "--type", "B3"})) == "InvalidArgument");
  CHECK(error_code(run({"char", "--type", "B3", "--lambda", "0,0,0", "--format", "xml"})) == "InvalidArgument");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "char", "--max-rank", "4"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("failures").empty());
  CHECK(j.at("checks").get<int>() > 0);
  r = run({"verify", "--suite", "graded", "--grid", "B3:m<=3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("checks").get<int>() > 100);
  CHECK(run({"verify", "--suite", "lweight"}).code == 0);
  CHECK(error_code(run({"verify", "--suite", "graded", "--grid", "B3"})) == "InvalidArgument");
  CHECK(error_code(run({"verify", "--suite", "nope"})) == "InvalidArgument");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "all", "--seed", "7"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> g{"graded", "--type", "D4", "--lambda", "2,1,1,1"};
  CHECK(run(g).out == run(g).out);
}
