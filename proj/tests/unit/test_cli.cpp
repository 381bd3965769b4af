#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hasym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hasym::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("series beta and q", "[cli]") {
  auto r = run({"series", "beta", "--order", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"] == nlohmann::json({"1", "-3/4", "-21/16", "-165/32", "-7245/256"}));

  r = run({"series", "q", "--order", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "q_1 = 3/16 z - 1/16 c\n");

  r = run({"series", "alpha", "--order", "0", "--format", "csv"});
  CHECK(r.out == "k,value\n0,1\n");
}

TEST_CASE("series usage errors", "[cli]") {
  CHECK(run({"series", "gamma"}).code == 2);
  CHECK(run({"series", "q", "--order", "0"}).code == 2);
  CHECK(run({"series", "beta", "--order", "-1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("integrate output is monotone, positive and deterministic", "[cli]") {
  const auto a = run({"integrate", "--t-max", "1e3"});
  REQUIRE(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows.front() == "t,h,hprime");
  double prev_t = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double t = 0, h = 0, hp = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &t, &h, &hp) == 3);
    CHECK(t > prev_t);
    CHECK(h > 0);
    prev_t = t;
  }
  CHECK(prev_t == 1000.0);
  CHECK(a.err.rfind("final t = ", 0) == 0);
  const auto b = run({"integrate", "--t-max", "1e3"});
  CHECK(a.out == b.out);
}

TEST_CASE("integrate to a file with a grid", "[cli]") {
  const auto path = (std::filesystem::temp_directory_path() / "hasym_cli_test_traj.json").string();
  const auto r = run({"integrate", "--t-max", "100", "--grid", "1,10,100", "--format", "json", "--out", path});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["samples"].size() == 4);
  CHECK(r.out.rfind("final t = ", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"integrate", "--h0", "0"}).code == 2);
  CHECK(run({"integrate", "--h0", "abc"}).code == 2);
}

TEST_CASE("constant by both routes", "[cli]") {
  auto r = run({"constant", "--method", "both"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"].get<bool>());
  CHECK(std::stod(j["discrepancy"].get<std::string>()) <= 1e-6);

  // an impossible tolerance is a verification failure
  r = run({"constant", "--tol", "1e-30"});
  CHECK(r.code == 1);

  r = run({"constant", "--method", "quadrature", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
}

TEST_CASE("constant obeys the shift law", "[cli]") {
  // h(1), h'(1) of the (0, 1, 1) solution, placed at time 0
  const auto traj = run({"integrate", "--t-max", "1", "--grid", "1", "--rel-tol", "1e-20", "--abs-tol", "1e-22",
                         "--format", "json"});
  const auto last = nlohmann::json::parse(traj.out)["samples"].back();
  const auto base = nlohmann::json::parse(run({"constant", "--method", "quadrature"}).out);
  const auto shifted = nlohmann::json::parse(run({"constant", "--method", "quadrature", "--h0",
                                                  last["h"].get<std::string>(), "--h1",
                                                  last["hprime"].get<std::string>()})
                                                 .out);
  const double c = std::stod(base["c_quadrature"].get<std::string>());
  const double cs = std::stod(shifted["c_quadrature"].get<std::string>());
  CHECK(std::abs(cs - (c - 4)) < 1e-6);
}

TEST_CASE("verify exit codes", "[cli]") {
  // loose tolerance cannot resolve the order-3 remainder
  auto r = run({"verify", "--rel-tol", "1e-4", "--abs-tol", "1e-6"});
  CHECK(r.code == 3);
  CHECK(r.err.find("accuracy gating") != std::string::npos);

  r = run({"verify", "--synthetic", "4", "--c", "-2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 1 + 4 * 5);

  CHECK(run({"verify", "--grid", "1e3,1e2"}).code == 2);
  CHECK(run({"verify", "--grid", "1,10"}).code == 2);
}

TEST_CASE("verify on a short grid passes", "[cli]") {
  const auto r = run({"verify", "--grid", "1e2,1e3,1e4", "--n-max", "2", "--rel-tol", "1e-24", "--abs-tol", "1e-26"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST_CASE("lambert subcommand", "[cli]") {
  auto r = run({"lambert", "--order", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.front() == "n,x,y_numeric,series,normalized,residual");
  CHECK(rows.size() == 1 + 4 * 5);
  CHECK(run({"lambert", "--grid", "1,10"}).code == 2);
  CHECK(run({"lambert", "--grid", "0.5"}).code == 2);
}
