#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ualpha/cli.hpp"

using ualpha::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("generate") {
  const auto r = call({"--format", "csv", "generate", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 65);  // header + 64 rows
  const auto j = nlohmann::json::parse(call({"generate", "5", "--format", "json"}).out);
  CHECK(j["order"] == 64);
  CHECK(j["elements"].size() == 64);
  CHECK(call({"generate", "6"}).code == 2);
  CHECK(call({"--max-level", "7", "generate", "7"}).code == 0);
  CHECK(call({"--max-level", "8", "generate", "7"}).code == 2);
}

TEST_CASE("table") {
  const auto j = nlohmann::json::parse(call({"--format", "json", "table", "2"}).out);
  CHECK(j["table"].size() == 8);
  CHECK(j["table"][0].size() == 8);
  const auto sign = call({"--format", "csv", "table", "0"});
  CHECK(sign.out == "*,1,-1\n1,1,-1\n-1,-1,1\n");
  CHECK(call({"table", "-1"}).code == 2);
  CHECK(call({"table"}).code == 2);
}

TEST_CASE("rewrite") {
  const auto j = nlohmann::json::parse(call({"--format", "json", "rewrite", "4"}).out);
  CHECK(j["steps"].size() == 4);
  CHECK(j["steps"][3]["alphabet"].size() == 5);
  const auto two = nlohmann::json::parse(call({"--format", "json", "--steps", "2", "rewrite"}).out);
  CHECK(two["steps"][0]["label"] == "conjugation");
  CHECK(two["steps"][1]["label"] == "complexification");
  const auto csv = call({"--format", "csv", "rewrite", "3"}).out;
  CHECK(csv.find("2,complexification,created,3,9,3,1,1\n") != std::string::npos);
  CHECK(call({"rewrite", "0"}).code == 2);
}

TEST_CASE("pentads") {
  const auto j = nlohmann::json::parse(call({"--format", "json", "pentads"}).out);
  CHECK(j["level"] == 5);
  CHECK(j["max_set"] == 5);
  CHECK_FALSE(j["pentads"].empty());
  const auto filtered =
      nlohmann::json::parse(call({"--format", "json", "pentads", "--signature", "+1,-1,-1,-1,-1"}).out);
  CHECK(filtered["pentads"].size() < j["pentads"].size());
  CHECK(call({"pentads", "--signature", "bogus"}).code == 2);
}

TEST_CASE("nilpotent") {
  const auto on = call({"nilpotent", "5", "0", "0", "4", "3"});
  CHECK(on.code == 0);
  CHECK(on.out.find("square: 0\n") != std::string::npos);
  const auto off = call({"nilpotent", "2", "0", "0", "1", "1"});
  CHECK(off.code == 0);
  CHECK(off.out.find("square: 2*1\n") != std::string::npos);

  const auto j = nlohmann::json::parse(call({"--format", "json", "nilpotent", "5", "0", "0", "4", "3"}).out);
  CHECK(j["square"] == "0");
  CHECK(j["pentad"].size() == 5);
  CHECK(j["annihilation"].size() == 4);
  const auto offj = nlohmann::json::parse(call({"--format", "json", "nilpotent", "2", "0", "0", "1", "1"}).out);
  CHECK(offj["annihilation"].is_null());

  CHECK(call({"nilpotent", "5/2", "0", "0", "3/2", "2"}).out.find("square: 0\n") != std::string::npos);
  CHECK(call({"nilpotent", "5", "0", "0", "4"}).code == 2);
  CHECK(call({"nilpotent", "x", "0", "0", "4", "3"}).code == 2);
  CHECK(call({"nilpotent", "--", "-5", "0", "0", "4", "3"}).code == 2);
  CHECK(call({"nilpotent", "5", "0", "0", "4", "3", "--signs", "-,+"}).code == 0);
}

TEST_CASE("verify and determinism") {
  const auto a = call({"--format", "json", "--seed", "99", "verify"});
  const auto b = call({"--format", "json", "--seed", "99", "verify"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 99);
}

TEST_CASE("output file and usage errors") {
  const std::string path = "ualpha_cli_test_output.json";
  const auto r = call({"--format", "json", "--output", path, "table", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["order"] == 4);
  in.close();
  std::remove(path.c_str());

  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--format", "xml", "generate", "1"}).code == 2);
}
