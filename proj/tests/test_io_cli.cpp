#include <doctest.h>

#include "haarshift/json_io.hpp"
#include "test_helpers.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using namespace haarshift;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HAARSHIFT_CLI_PATH) + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_path(const std::string& name) {
  return std::string("haarshift_test_") + name;
}

}  // namespace

TEST_CASE("function files round trip exactly") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 30; ++t) {
    const auto f =
        testutil::random_function(rng, testutil::random_interval(rng, -3, 3, 50), 4);
    const auto j = function_to_json(f);
    CHECK(function_from_json(j) == f);
    CHECK(j.at("mode") == "exact");
    CHECK(j.at("leaves").size() == 16);
  }
}

TEST_CASE("float mode is accepted on the oracle side only") {
  Json j;
  j["root"] = "0:0";
  j["depth"] = 1;
  j["mode"] = "float";
  j["leaves"] = {0.5, -1.25};
  CHECK_THROWS(function_from_json(j));
  const auto f = float_function_from_json(j);
  CHECK(f.values == std::vector<double>{0.5, -1.25});
  const auto back = float_function_to_json(f);
  CHECK(back.at("mode") == "float");

  // exact files also load on the float side
  const auto exact = function_to_json(indicator({0, 0}));
  const auto as_float = float_function_from_json(exact);
  CHECK(as_float.values == std::vector<double>{1.0});
}

TEST_CASE("form serialization carries the documented fields") {
  const auto form = restricted_indicator_shift({0, 0}, {1, 0});
  const auto j = form_to_json(form);
  CHECK(j.at("K") == "1:0");
  CHECK(j.at("constant") == "-1/4");
  CHECK(j.at("norm2") == "3/4");
  REQUIRE(j.at("inner").size() == 1);
  CHECK(j.at("inner")[0].at("L") == "1:0");
}

TEST_CASE("cli: constant emits the exact covering form") {
  const auto res = run_cli("constant --i 0:0 --k 1:0 --json");
  REQUIRE(res.exit_code == 0);
  const auto j = Json::parse(res.output);
  CHECK(j.at("case") == "covering");
  CHECK(j.at("exact_constant") == "3/4");
  CHECK(j.at("paper_bound") == "5/8");

  const auto wider = run_cli("constant --i 0:0 --k 2:0 --json");
  REQUIRE(wider.exit_code == 0);
  const auto w = Json::parse(wider.output);
  CHECK(w.at("exact_constant") == "7/8");
  CHECK(w.at("paper_bound") == "13/16");
}

TEST_CASE("cli: gap form vanishes in the anchored zero configuration") {
  const auto res = run_cli("constant --i 1:1 --k 0:0 --json");
  REQUIRE(res.exit_code == 0);
  const auto j = Json::parse(res.output);
  CHECK(j.at("case") == "gap");
  CHECK(j.at("form").at("constant") == "0");
  CHECK(j.at("form").at("norm2") == "0");
}

TEST_CASE("cli: extremal then norm gives an exact zero") {
  const std::string out = temp_path("extremal.json");
  const auto first = run_cli("extremal --i 2:0 --k 0:0 --out " + out);
  REQUIRE(first.exit_code == 0);
  const auto second = run_cli("norm --i 2:0 --k 0:0 --f " + out);
  REQUIRE(second.exit_code == 0);
  CHECK(second.output.find("norm2: 0\n") != std::string::npos);
  CHECK(second.output.find("cross_check: equal") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli: apply writes a window restriction that reloads exactly") {
  const std::string fin = temp_path("apply_in.json");
  const std::string fout = temp_path("apply_out.json");
  save_json_file(fin, function_to_json(indicator({0, 0})));
  const auto res = run_cli("apply --f " + fin + " --window 0:1 --out " + fout);
  REQUIRE(res.exit_code == 0);
  const auto g = function_from_json(load_json_file(fout));
  // the window sits beside the support: the gap value is -(1/2) h_K
  CHECK(g.mean().is_zero());
  CHECK(g.coefficient({0, 1}) == Sqrt2Scalar(Rational(-1, 2)));
  std::remove(fin.c_str());
  std::remove(fout.c_str());
}

TEST_CASE("cli: svd prints the csv header and a row") {
  const auto res = run_cli("svd --i 0:0 --k 1:1 --depth 4");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("I,K,depth,constraint,sigma_min,sigma_max,rank_numeric") !=
        std::string::npos);
  CHECK(res.output.find("0:0,1:1,4,none,") != std::string::npos);
}

TEST_CASE("cli: pw reports eta and the mean bound") {
  const std::string coeffs = temp_path("coeffs.json");
  {
    std::ofstream out(coeffs);
    out << R"({"coeffs":[{"k":0,"re":2},{"k":1,"re":0.5},{"k":-1,"re":0.5}]})";
  }
  const auto res = run_cli("pw --i 0:0 --coeffs " + coeffs + " --depth 10");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("eta: 0.333333333333") != std::string::npos);
  CHECK(res.output.find("holds") != std::string::npos);
  std::remove(coeffs.c_str());
}

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("constant --i 0:0").exit_code == 2);          // missing --k
  CHECK(run_cli("constant --i nonsense --k 0:0").exit_code == 2);
  CHECK(run_cli("norm --i 0:0 --k 0:0 --f missing.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("cli: audit exits zero and reports deterministically") {
  const std::string out1 = temp_path("audit1.json");
  const std::string out2 = temp_path("audit2.json");
  const auto res1 = run_cli("audit --scales -2..2 --out " + out1);
  REQUIRE(res1.exit_code == 0);
  CHECK(res1.output.find("L4.2: discrepancy") != std::string::npos);
  CHECK(res1.output.find("engine/oracle agreement") != std::string::npos);
  const auto res2 = run_cli("audit --scales -2..2 --out " + out2);
  REQUIRE(res2.exit_code == 0);
  std::ifstream a(out1), b(out2);
  const std::string body1((std::istreambuf_iterator<char>(a)),
                          std::istreambuf_iterator<char>());
  const std::string body2((std::istreambuf_iterator<char>(b)),
                          std::istreambuf_iterator<char>());
  CHECK(body1 == body2);
  CHECK(!body1.empty());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
