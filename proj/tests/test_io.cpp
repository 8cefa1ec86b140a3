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

#include <cmath>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "regional/corpus.hpp"
#include "regional/harness.hpp"
#include "regional/report_io.hpp"
#include "regional/trajectory_io.hpp"

using namespace regional;

namespace {

Trajectory sample(Algo algo) {
  const CorpusEntry e = corpus_entry("rosenbrock");
  AlgoConfig c;
  c.algo = algo;
  c.l1 = 1000;
  c.l2 = 200;
  c.max_iters = 25;
  Vec x0(2);
  x0 << -1.2, 1.0;
  return run(e.objective, c, {e.recommended.kappa, e.recommended.f_ref}, x0);
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("trajectory CSV header and row count") {
  const Trajectory t = sample(Algo::TR_H);
  std::ostringstream os;
  write_trajectory_csv(t, os);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == t.records.size() + 1);
  CHECK(ls[0] ==
        "k,x0,x1,f,grad_norm,lambda_minus,nu,delta,step_norm,accepted,region,delta_f");
  CHECK(ls[1].rfind("0,-1.2,1,", 0) == 0);
}

TEST_CASE("RG leaves the nu and radius fields empty") {
  const Trajectory t = sample(Algo::RG);
  std::ostringstream os;
  write_trajectory_csv(t, os);
  const auto ls = lines(os.str());
  // k,x0,x1,f,grad_norm,lambda_minus,nu,delta,...
  std::vector<std::string> fields;
  std::istringstream row(ls[1]);
  for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
  REQUIRE(fields.size() >= 8);
  CHECK(fields[6].empty());
  CHECK(fields[7].empty());
}

TEST_CASE("trajectory JSON round trip is byte identical") {
  for (Algo a : all_algos()) {
    const Trajectory t = sample(a);
    const std::string once = trajectory_to_json(t).dump(2);
    const Trajectory back = trajectory_from_json(nlohmann::json::parse(once));
    CHECK(trajectory_to_json(back).dump(2) == once);
    CHECK(back.records.size() == t.records.size());
    CHECK(back.records.back().x == t.records.back().x);
    CHECK(back.termination == t.termination);
  }
}

TEST_CASE("non-finite reals survive the JSON round trip") {
  for (double v : {INFINITY, -INFINITY}) {
    CHECK(real_from_json(real_to_json(v)) == v);
  }
  CHECK(std::isnan(real_from_json(real_to_json(NAN))));
  CHECK(real_from_json(real_to_json(0.1)) == 0.1);
  CHECK_THROWS_AS(real_from_json(nlohmann::json("x")), InputError);
  CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("trajectory JSON rejects schema mismatches and corrupt records") {
  nlohmann::json j = trajectory_to_json(sample(Algo::RG));
  nlohmann::json bad = j;
  bad["schema_version"] = "regional.trajectory/0";
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
  bad = j;
  bad.erase("schema_version");
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
  bad = j;
  bad["records"][1]["k"] = 7;
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
  bad = j;
  bad["records"][0]["x"].push_back(1.0);
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
  bad = j;
  bad["records"][0].erase("f");
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
  bad = j;
  bad["records"] = nlohmann::json::array();
  CHECK_THROWS_AS(trajectory_from_json(bad), InputError);
}

TEST_CASE("scan CSV layout") {
  const RegionScan s = region_scan(corpus_entry("saddle2d").objective, 3, {0.5, 0.0});
  std::ostringstream os;
  write_scan_csv(s, os);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "x0,x1,label,delta_f,grad_norm,lambda_minus");
  CHECK(ls[5] == "0,0,R2_3,10,0,2");
}

TEST_CASE("report JSON and summary CSV") {
  const Trajectory t = sample(Algo::TR_H);
  const VerificationReport r = verify_run(t, t.region_params);
  const nlohmann::json j = report_to_json(r, {});
  CHECK(j.at("schema_version") == "regional.report/1");
  CHECK(j.at("trajectory_id") == "rosenbrock/tr_h");
  CHECK(j.at("per_iteration_checks").size() == r.checks.size());
  CHECK(j.at("applicable_checks") == r.applicable_checks);
  CHECK(j.at("violations").size() == r.violations.size());
  std::ostringstream os;
  write_summary_csv(r, os);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == r.checks.size() + 1);
  CHECK(ls[0] == "k,region,region_next,class,ratio_bound,regime,observed,applicable,satisfied");
}
