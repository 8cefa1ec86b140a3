// Copyright 2026 The Regional Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "regional/cli.hpp"

using namespace regional;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "regional_cli_test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run writes CSV and JSON and reports the termination") {
  const fs::path d = scratch("run");
  const std::string prefix = (d / "traj").string();
  const Result r = cli({"run", "--obj", "quad_sc", "--algo", "rg", "--l1", "2",
                        "--x0", "1,1", "--eps-f", "1e-8", "--out", prefix});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("termination=eps_f") != std::string::npos);
  CHECK(fs::exists(prefix + ".csv"));
  CHECK(fs::exists(prefix + ".json"));
  const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  CHECK(j.at("schema_version") == "regional.trajectory/1");
}

TEST_CASE("run reports a stall for TR-G at a saddle") {
  const fs::path d = scratch("stall");
  const Result r = cli({"run", "--obj", "saddle2d", "--algo", "tr_g", "--x0", "0,0",
                        "--out", (d / "t").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("termination=stalled") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(cli({"run", "--obj", "nope", "--algo", "rg", "--x0", "0"}).code == kExitUsage);
  CHECK(cli({"run", "--obj", "quad_sc", "--algo", "xx", "--x0", "0,0"}).code ==
        kExitUsage);
  CHECK(cli({"run", "--obj", "quad_sc", "--algo", "rg", "--x0", "1,2,3"}).code ==
        kExitUsage);
  CHECK(cli({"run", "--obj", "quad_sc", "--algo", "rg"}).code == kExitUsage);
  CHECK(cli({"scan", "--obj", "fig1", "--res", "1"}).code == kExitUsage);
  CHECK(cli({"verify", "/nonexistent/traj.json"}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  const Result unknown = cli({"run", "--obj", "nope", "--algo", "rg", "--x0", "0"});
  CHECK(unknown.err.find("unknown objective") != std::string::npos);
}

TEST_CASE("divergence exits with code 3 and keeps the partial trajectory") {
  const fs::path d = scratch("div");
  const std::string prefix = (d / "t").string();
  const Result r = cli({"run", "--obj", "cubic2d", "--algo", "rg", "--x0", "-1,0",
                        "--divergence-floor", "-10", "--out", prefix});
  CHECK(r.code == kExitDiverged);
  CHECK(fs::exists(prefix + ".json"));
}

TEST_CASE("scan prints a histogram and writes the grid") {
  const fs::path d = scratch("scan");
  const std::string csv = (d / "fig1.csv").string();
  const Result r = cli({"scan", "--obj", "fig1", "--kappa", "0.05", "--f-ref", "-0.5",
                        "--res", "601", "--out", csv});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Outside") != std::string::npos);
  std::ifstream is(csv);
  int rows = 0;
  for (std::string l; std::getline(is, l);) ++rows;
  CHECK(rows == 602);
}

TEST_CASE("verify passes a clean run and flags a corrupted one") {
  const fs::path d = scratch("verify");
  const std::string prefix = (d / "traj").string();
  REQUIRE(cli({"run", "--obj", "quad_sc", "--algo", "rg", "--l1", "2", "--x0", "1,1",
               "--eps-f", "1e-8", "--out", prefix})
              .code == kExitOk);
  const Result ok = cli({"verify", prefix + ".json", "--summary-csv",
                         (d / "sum.csv").string()});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("violations=0") != std::string::npos);
  CHECK(fs::exists(prefix + ".report.json"));
  CHECK(fs::exists(d / "sum.csv"));

  auto j = nlohmann::json::parse(slurp(prefix + ".json"));
  j["records"][3]["f"] = j["records"][3]["f"].get<double>() * 5.0;
  const std::string bad = (d / "bad.json").string();
  std::ofstream(bad) << j.dump();
  const Result v = cli({"verify", bad, "--out", (d / "bad.report.json").string()});
  CHECK(v.code == kExitViolations);
  const auto rep = nlohmann::json::parse(slurp(d / "bad.report.json"));
  CHECK_FALSE(rep.at("violations").empty());

  std::ofstream(d / "junk.json") << "{not json";
  CHECK(cli({"verify", (d / "junk.json").string()}).code == kExitUsage);
}

TEST_CASE("config files are read and flags override them") {
  const fs::path d = scratch("config");
  std::ofstream(d / "a.cfg") << "obj = \"quad_sc\"\nalgo = \"rg\"\nx0 = \"1,1\"\n"
                                "l1 = 2\nmax-iters = 3\n";
  const Result a = cli({"run", "--config", (d / "a.cfg").string(), "--out",
                        (d / "a").string()});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("iterations=3") != std::string::npos);
  const Result b = cli({"run", "--config", (d / "a.cfg").string(), "--max-iters", "5",
                        "--out", (d / "b").string()});
  CHECK(b.out.find("iterations=5") != std::string::npos);
}

TEST_CASE("batch runs every config in a directory") {
  const fs::path d = scratch("batch");
  std::ofstream(d / "one.cfg") << "obj = \"quad_sc\"\nalgo = \"rg\"\nx0 = \"1,1\"\n"
                                  "l1 = 2\nmax-iters = 4\n";
  std::ofstream(d / "two.cfg") << "obj = \"pl_noncvx\"\nalgo = \"rn\"\nx0 = \"3\"\n"
                                  "l1 = 20\nl2 = 20\nmax-iters = 4\n";
  const Result r = cli({"run", "--batch", d.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("one.cfg") < r.out.find("two.cfg"));
  CHECK(fs::exists(d / "one.json"));
  CHECK(fs::exists(d / "two.json"));
  CHECK(cli({"run", "--batch", (d / "missing").string()}).code == kExitUsage);
}

TEST_CASE("help lists the file schemas and exit codes") {
  const Result r = cli({"--help"});
  CHECK(r.code == kExitOk);
  const std::string all = r.out + r.err;
  for (const char* s : {"trajectory-csv/1", "region-scan-csv/1", "report-summary-csv/1",
                        "regional.report/1", "Exit codes"}) {
    CHECK(all.find(s) != std::string::npos);
  }
}

TEST_CASE("corpus manifest") {
  const Result r = cli({"corpus"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == "regional.corpus/1");
  CHECK(j.at("entries").size() == 7);
  for (const auto& e : j.at("entries")) {
    CHECK(e.contains("id"));
    CHECK(e.contains("recommended"));
  }
}
