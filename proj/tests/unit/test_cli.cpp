// Copyright 2026 The Watermelon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "melon/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "melon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = melon::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count") {
  auto r = invoke({"count", "--n", "3", "--p", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,p,h,count\n3,2,-,14\n");
  r = invoke({"count", "--n", "2", "--p", "2", "--h", "2", "--format", "csv"});
  CHECK(r.out == "n,p,h,count\n2,2,2,0\n");
  r = invoke({"--format", "csv", "count", "--n", "3", "--p", "1"});
  CHECK(r.out == "n,p,h,count\n3,1,-,5\n");
  r = invoke({"count", "--n", "3", "--p", "1"});
  CHECK(r.out.find("5") != std::string::npos);
}

TEST_CASE("height") {
  auto r = invoke({"height", "--n", "2", "--p", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,p,route,H_num,H_den,H\n2,2,determinant,11,3,3.6666666667\n");
  r = invoke({"height", "--n", "2", "--p", "1", "--format", "csv", "--digits", "4"});
  CHECK(r.out == "n,p,route,H_num,H_den,H\n2,1,determinant,3,2,1.5000\n");
  r = invoke({"height", "--n", "30", "--p", "2", "--route", "both", "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[1].substr(ls[1].find("determinant") + 11) == ls[2].substr(ls[2].find("sums") + 4));
  r = invoke({"height", "--n", "20", "--p", "2", "--route", "sums", "--sum-mode", "hp", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1].find("20,2,sums,-,-,") == 0);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == melon::kExitUsage);
  CHECK(invoke({"bogus"}).code == melon::kExitUsage);
  CHECK(invoke({"count", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"count", "--n", "0", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"count", "--n", "x", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"count", "--n", "3", "--p", "2", "--h", "-1"}).code == melon::kExitUsage);
  CHECK(invoke({"--precision-bits", "40", "count", "--n", "3", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"--tol", "-1", "count", "--n", "3", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"--tol", "abc", "count", "--n", "3", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"--format", "xml", "count", "--n", "3", "--p", "2"}).code == melon::kExitUsage);
  CHECK(invoke({"height", "--n", "3", "--p", "3", "--route", "sums"}).code == melon::kExitUsage);
  CHECK(invoke({"convergence", "--n-max", "2001"}).code == melon::kExitUsage);
  CHECK(invoke({"verify", "--level", "medium"}).code == melon::kExitUsage);
  const Run bad = invoke({"count", "--n", "0", "--p", "2"});
  CHECK(bad.err.find("Usage") != std::string::npos);
  const Run help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("convergence") != std::string::npos);
  // constants with a tolerance the quadrature cannot meet within its budget
  const Run numeric = invoke({"--tol", "1e-45", "constants", "--format", "csv"});
  CHECK(numeric.code == melon::kExitNumeric);
  CHECK(numeric.out.rfind("a,b,residue_main_coeff", 0) == 0);
}

TEST_CASE("constants") {
  const Run r = invoke({"--format", "csv", "--tol", "1e-10", "constants"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "a,b,residue_main_coeff,residue_half,c_ab,c_error");
  CHECK(ls[1].rfind("0,0,1/4,-1/2,-1.5522", 0) == 0);
  CHECK(ls[3].rfind("1,1,1/32,0,", 0) == 0);
  const std::string footer = r.err;
  const auto at = footer.find("K*sqrt(pi) = ");
  REQUIRE(at != std::string::npos);
  const double slope = std::stod(footer.substr(at + 13));
  CHECK(std::abs(slope - 2.57758) < 5e-4);

  const Run wide = invoke({"--format", "json", "--tol", "1e-10", "constants", "--max-a", "3", "--max-b", "3"});
  REQUIRE(wide.code == 0);
  const auto j = nlohmann::json::parse(wide.out);
  CHECK(j.size() == 10);
  CHECK(j[0]["a"] == 0);
  CHECK(j[0]["residue_main_coeff"] == "1/4");
  const Run table = invoke({"--tol", "1e-10", "constants"});
  CHECK(table.out.find("K*sqrt(pi) = 2.577") != std::string::npos);
  CHECK(invoke({"constants", "--max-a", "1", "--max-b", "2"}).code == melon::kExitUsage);
}

TEST_CASE("convergence") {
  const Run r = invoke({"--format", "csv", "convergence", "--n-max", "1000", "--step", "100"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "n,H_exact_num,H_exact_den,H_asym,q");
  CHECK(ls[1] == "1,3,1,0.5775800000,5.1940856678");
  CHECK(ls.back().rfind("1000,", 0) == 0);
  CHECK(ls.back().substr(ls.back().rfind(',') + 1) == "1.0073359645");
  double prev = 10;
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const double q = std::stod(ls[i].substr(ls[i].rfind(',') + 1));
    CHECK(q < prev);
    prev = q;
  }
  CHECK(r.out.find('\r') == std::string::npos);
  // byte identical across runs
  CHECK(invoke({"--format", "csv", "convergence", "--n-max", "1000", "--step", "100"}).out == r.out);

  const Run j = invoke({"--format", "json", "convergence", "--n-min", "5", "--n-max", "7"});
  const auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 3);
  CHECK(arr[2]["n"] == 7);
  CHECK(arr[2]["H_exact_num"].is_string());
}

TEST_CASE("out file") {
  const auto path = std::filesystem::temp_directory_path() / "melon_cli_test.csv";
  const Run r = invoke({"--format", "csv", "--out", path.string(), "count", "--n", "3", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "n,p,h,count\n3,2,-,14\n");
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const Run quick = invoke({"verify", "--level", "quick"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("[FAIL]") == std::string::npos);
  const Run full = invoke({"verify", "--level", "full"});
  CHECK(full.code == 0);
  CHECK(full.out.find("q(1000) = 1.0073") != std::string::npos);
  CHECK(full.out.find("[PASS] constants-pipeline") != std::string::npos);
  const Run csv = invoke({"--format", "csv", "verify"});
  CHECK(csv.out.rfind("suite,status,detail\n", 0) == 0);
}
