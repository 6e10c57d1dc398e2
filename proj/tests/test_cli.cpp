#include <doctest.h>

#include "sumprod/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <set>
#include <sstream>

using sumprod::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> keys(const Json& j) {
  std::set<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.insert(it.key());
  return k;
}

// Pull "a'=..." style values out of the text witness line.
std::vector<std::string> witness_values(const std::string& text) {
  std::vector<std::string> v;
  for (const char* tag : {"a'=", "b'=", "c'=", "d'="}) {
    const auto at = text.find(tag);
    REQUIRE(at != std::string::npos);
    const auto start = at + 3;
    v.push_back(text.substr(start, text.find_first_of(" \n", start) - start));
  }
  return v;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = call({"witness", "1", "1", "1", "1", "2", "7"});
  CHECK(r.code == 1);
  CHECK(r.out.find("not-member") != std::string::npos);

  r = call({"check", "3", "5", "2", "2", "19", "19", "3", "5", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid\n");

  r = call({"demo"});
  CHECK(r.code == 0);
  CHECK(r.out.find("53 in R_19(15): true") != std::string::npos);
  CHECK(r.out.find("53 in R_19(3)R_19(5): false") != std::string::npos);
}

TEST_CASE("witness round-trips through check") {
  const std::vector<std::vector<std::string>> instances = {
      {"3", "5", "2", "2", "19", "152"},
      {"2", "4", "6", "8", "10", "116"},                              // 56 + 3 * 20
      {"-7", "11", "4", "-9", "12", "119999999999999999999999887"},  // -113 + 12 * 10^25
      {"1", "1", "1", "1", "1", "0"}};
  for (const auto& inst : instances) {
    std::vector<std::string> args{"witness"};
    args.insert(args.end(), inst.begin(), inst.end());
    const auto r = call(args);
    REQUIRE(r.code == 0);
    std::vector<std::string> check{"check"};
    check.insert(check.end(), inst.begin(), inst.end());
    for (const auto& v : witness_values(r.out)) check.push_back(v);
    CHECK(call(check).code == 0);
  }
  CHECK(call({"check", "3", "5", "2", "2", "19", "19", "3", "5", "2", "3"}).code == 1);
}

TEST_CASE("--json fields are stable") {
  auto r = call({"--json", "witness", "3", "5", "2", "2", "19", "152"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::set<std::string>{"command", "outcome", "instance", "delta", "witness"});
  CHECK(keys(j["instance"]) == std::set<std::string>{"a", "b", "c", "d", "m", "N"});
  CHECK(keys(j["witness"]) == std::set<std::string>{"a_prime", "b_prime", "c_prime", "d_prime"});
  CHECK(j["outcome"] == "witness");
  CHECK(j["witness"]["a_prime"].is_string());
  CHECK(call({"--json", "witness", "3", "5", "2", "2", "19", "152"}).out == r.out);

  r = call({"witness", "3", "5", "2", "2", "19", "152", "--json", "--trace"});
  const Json t = Json::parse(r.out)["trace"];
  for (const char* k : {"m_prime", "x_prime", "y_prime", "u", "v", "P1", "P2", "P3", "a_prime", "c_prime"})
    CHECK(t.contains(k));

  r = call({"--json", "witness", "1", "1", "1", "1", "2", "7"});
  CHECK(r.code == 1);
  CHECK(keys(Json::parse(r.out)) == std::set<std::string>{"command", "outcome", "instance"});

  r = call({"--json", "threshold", "1", "1", "1", "1", "2"});
  const Json th = Json::parse(r.out);
  CHECK(th["N0"] == "864");
  CHECK(th["a_hi"] == "9");
  CHECK(th["c_hi"] == "45");

  r = call({"--json", "check", "3", "5", "2", "2", "19", "19", "3", "5", "2", "2"});
  CHECK(Json::parse(r.out)["valid"] == true);

  r = call({"--json", "demo"});
  const Json demo = Json::parse(r.out);
  CHECK(demo["class_member"] == true);
  CHECK(demo["product_member"] == false);
}

TEST_CASE("threshold, progression and subgroup") {
  auto r = call({"threshold", "1", "1", "1", "1", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "N0=864 a_hi=9 c_hi=45\n");

  r = call({"progression", "1", "1", "1", "1", "2", "866"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("witness N0=864", 0) == 0);

  r = call({"progression", "1", "1", "1", "1", "2", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("not-member", 0) == 0);

  r = call({"subgroup", "2", "4", "6", "8", "10", "6"});
  CHECK(r.code == 0);
  r = call({"subgroup", "2", "4", "6", "8", "10", "3"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-member\n");
}

TEST_CASE("iterate") {
  auto r = call({"iterate", "7", "17", "1:5", "2:3,4"});
  CHECK(r.code == 0);
  CHECK(r.out == "witness\n5\n3,4\n");

  r = call({"iterate", "5", "11", "3:1,2,3", "3:1,1,1"});
  CHECK(r.code == 1);
  CHECK(r.out == "unsupported-shape\n");

  r = call({"iterate", "7", "18", "1:5", "2:3,4"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-member\n");

  CHECK(call({"iterate", "7", "17", "2:5", "2:3,4"}).code == 2);
  CHECK(call({"iterate", "7", "17", "2:3,4", "1:5"}).code == 2);
}

TEST_CASE("exceptions and grid") {
  auto r = call({"exceptions", "1", "1", "1", "1", "2", "--cap", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("exceptions count=", 0) == 0);

  r = call({"--json", "exceptions", "1", "1", "1", "1", "2", "--cap", "100"});
  const Json j = Json::parse(r.out);
  CHECK(j["cap"] == "100");
  std::vector<long> list;
  for (const auto& v : j["exceptions"]) list.push_back(std::stol(v.get<std::string>()));
  CHECK(std::is_sorted(list.begin(), list.end()));

  r = call({"grid", "--m-max", "3", "--window", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("discrepancies=0") != std::string::npos);

  r = call({"--json", "grid", "--m-max", "2", "--window", "3"});
  CHECK(Json::parse(r.out)["discrepancies"].empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"witness", "1", "1", "1", "1", "2"}).code == 2);
  CHECK(call({"witness", "1", "1", "1", "1", "2", "7", "8"}).code == 2);
  CHECK(call({"witness", "1", "1", "1", "1", "0", "7"}).code == 2);
  CHECK(call({"witness", "1", "1", "1", "1", "2", "0x7"}).code == 2);
  CHECK(call({"threshold", "0", "1", "1", "1", "2"}).code == 2);
  CHECK(call({"grid", "--m-max", "99"}).code == 2);
  CHECK(call({"grid", "--window"}).code == 2);
  CHECK(call({"exceptions", "1", "1", "1", "1", "2", "--cap", "1"}).code == 2);
  const auto r = call({"witness", "1"});
  CHECK(r.err.find("usage:") != std::string::npos);
}

TEST_CASE("built binary matches in-process run") {
  const std::string cmd = std::string(SUMPROD_CLI_PATH) + " witness 1 1 1 1 2 7";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[256] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  const int status = pclose(pipe);
  CHECK(std::string(buf, n) == "not-member\n");
  CHECK(WEXITSTATUS(status) == 1);
}
