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

#include "regional/trajectory_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace regional {
namespace {

using nlohmann::json;

json opt_real(const std::optional<double>& v) {
  return v ? real_to_json(*v) : json(nullptr);
}

std::optional<double> opt_real_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return real_from_json(j.at(key));
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

json config_to_json(const AlgoConfig& c) {
  return json{
      {"algo", algo_name(c.algo)},
      {"l1", real_to_json(c.l1)},
      {"l2", real_to_json(c.l2)},
      {"eta", real_to_json(c.eta)},
      {"psi", real_to_json(c.psi)},
      {"nu_min", real_to_json(c.nu_min)},
      {"nu_max", real_to_json(c.nu_max)},
      {"nu0", opt_real(c.nu0)},
      {"nu_reset", c.nu_reset == NuReset::kClamp ? "clamp" : "min"},
      {"max_iters", c.max_iters},
      {"eps_f", opt_real(c.termination.eps_f)},
      {"eps_1", opt_real(c.termination.eps_1)},
      {"eps_2", opt_real(c.termination.eps_2)},
      {"divergence_floor", opt_real(c.divergence_floor)},
  };
}

AlgoConfig config_from_json(const json& j) {
  AlgoConfig c;
  c.algo = algo_from_name(j.at("algo").get<std::string>());
  c.l1 = real_from_json(j.at("l1"));
  c.l2 = real_from_json(j.at("l2"));
  c.eta = real_from_json(j.at("eta"));
  c.psi = real_from_json(j.at("psi"));
  c.nu_min = real_from_json(j.at("nu_min"));
  c.nu_max = real_from_json(j.at("nu_max"));
  c.nu0 = opt_real_from(j, "nu0");
  const std::string reset = j.at("nu_reset").get<std::string>();
  if (reset != "clamp" && reset != "min") {
    throw InputError("unknown nu_reset rule: " + reset);
  }
  c.nu_reset = reset == "clamp" ? NuReset::kClamp : NuReset::kToMin;
  c.max_iters = j.at("max_iters").get<int>();
  c.termination.eps_f = opt_real_from(j, "eps_f");
  c.termination.eps_1 = opt_real_from(j, "eps_1");
  c.termination.eps_2 = opt_real_from(j, "eps_2");
  c.divergence_floor = opt_real_from(j, "divergence_floor");
  return c;
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a real number, got " + j.dump());
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  os << "k";
  for (int i = 0; i < traj.n; ++i) os << ",x" << i;
  os << ",f,grad_norm,lambda_minus,nu,delta,step_norm,accepted,region,delta_f\n";
  for (const auto& r : traj.records) {
    os << r.k;
    for (Eigen::Index i = 0; i < r.x.size(); ++i) os << ',' << format_real(r.x(i));
    os << ',' << format_real(r.f) << ',' << format_real(r.grad_norm) << ','
       << opt_field(r.lambda_minus) << ',' << opt_field(r.nu) << ','
       << opt_field(r.delta) << ',' << format_real(r.step_norm) << ','
       << (r.accepted ? 1 : 0) << ',' << region_name(r.region.region) << ','
       << format_real(r.delta_f) << '\n';
  }
}

json trajectory_to_json(const Trajectory& traj) {
  json records = json::array();
  for (const auto& r : traj.records) {
    json x = json::array();
    for (Eigen::Index i = 0; i < r.x.size(); ++i) x.push_back(real_to_json(r.x(i)));
    records.push_back(json{
        {"k", r.k},
        {"x", x},
        {"f", real_to_json(r.f)},
        {"grad_norm", real_to_json(r.grad_norm)},
        {"lambda_minus", opt_real(r.lambda_minus)},
        {"nu", opt_real(r.nu)},
        {"delta", opt_real(r.delta)},
        {"step_norm", real_to_json(r.step_norm)},
        {"accepted", r.accepted},
        {"model_decrease", real_to_json(r.model_decrease)},
        {"region", region_name(r.region.region)},
        {"delta_f", real_to_json(r.delta_f)},
    });
  }
  return json{
      {"schema_version", kTrajectoryJsonSchema},
      {"objective", traj.objective_id},
      {"n", traj.n},
      {"f_inf", opt_real(traj.f_inf)},
      {"region_params",
       {{"kappa", real_to_json(traj.region_params.kappa)},
        {"f_ref", real_to_json(traj.region_params.f_ref)}}},
      {"config", config_to_json(traj.config)},
      {"termination_reason", termination_name(traj.termination)},
      {"records", records},
  };
}

Trajectory trajectory_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("schema_version") ||
        j.at("schema_version") != kTrajectoryJsonSchema) {
      throw InputError(std::string("schema mismatch: expected ") +
                       kTrajectoryJsonSchema);
    }
    Trajectory t;
    t.objective_id = j.at("objective").get<std::string>();
    t.n = j.at("n").get<int>();
    t.f_inf = opt_real_from(j, "f_inf");
    t.region_params.kappa = real_from_json(j.at("region_params").at("kappa"));
    t.region_params.f_ref = real_from_json(j.at("region_params").at("f_ref"));
    t.config = config_from_json(j.at("config"));
    t.termination =
        termination_from_name(j.at("termination_reason").get<std::string>());
    int expect = 0;
    for (const auto& rj : j.at("records")) {
      IterateRecord r;
      r.k = rj.at("k").get<int>();
      if (r.k != expect++) throw InputError("record indices not consecutive");
      const auto& xj = rj.at("x");
      if (static_cast<int>(xj.size()) != t.n) {
        throw InputError("record dimension mismatch");
      }
      r.x.resize(t.n);
      for (int i = 0; i < t.n; ++i) r.x(i) = real_from_json(xj.at(i));
      r.f = real_from_json(rj.at("f"));
      r.grad_norm = real_from_json(rj.at("grad_norm"));
      r.lambda_minus = opt_real_from(rj, "lambda_minus");
      r.nu = opt_real_from(rj, "nu");
      r.delta = opt_real_from(rj, "delta");
      r.step_norm = real_from_json(rj.at("step_norm"));
      r.accepted = rj.at("accepted").get<bool>();
      r.model_decrease = real_from_json(rj.at("model_decrease"));
      r.delta_f = real_from_json(rj.at("delta_f"));
      r.region.region = region_from_name(rj.at("region").get<std::string>());
      r.region.witness = {r.delta_f, r.grad_norm, r.lambda_minus};
      t.records.push_back(std::move(r));
    }
    if (t.records.empty()) throw InputError("trajectory has no records");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed trajectory JSON: ") + e.what());
  }
}

void write_scan_csv(const RegionScan& scan, std::ostream& os) {
  const Eigen::Index n = scan.points.empty() ? 0 : scan.points.front().size();
  for (Eigen::Index i = 0; i < n; ++i) os << 'x' << i << ',';
  os << "label,delta_f,grad_norm,lambda_minus\n";
  for (size_t c = 0; c < scan.points.size(); ++c) {
    for (Eigen::Index i = 0; i < n; ++i) os << format_real(scan.points[c](i)) << ',';
    const auto& l = scan.labels[c];
    os << region_name(l.region) << ',' << format_real(l.witness.delta_f) << ','
       << format_real(l.witness.grad_norm) << ','
       << opt_field(l.witness.lambda_minus) << '\n';
  }
}

}  // namespace regional
