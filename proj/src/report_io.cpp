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

#include "regional/report_io.hpp"

#include <ostream>

#include "regional/trajectory_io.hpp"

namespace regional {
namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_real(const std::optional<double>& v) {
  return v ? real_to_json(*v) : json(nullptr);
}

}  // namespace

json report_to_json(const VerificationReport& rep,
                    const std::vector<EnvelopePoint>& envelope) {
  json cal = json::array();
  for (const auto& c : rep.calibration) {
    cal.push_back({{"class", class_name(c.cls)},
                   {"zeta", real_to_json(c.zeta)},
                   {"source", c.source},
                   {"windows", c.windows}});
  }
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({
        {"k", c.k},
        {"region", region_name(c.region)},
        {"region_next", region_name(c.region_next)},
        {"class", c.cls ? json(class_name(*c.cls)) : json(nullptr)},
        {"predicted",
         {{"ratio_bound", real_to_json(c.predicted.ratio_bound)},
          {"regime", regime_name(c.predicted.regime)},
          {"applicable", c.predicted.applicable},
          {"reason", c.predicted.reason}}},
        {"observed_ratio", real_to_json(c.observed)},
        {"applicable", c.applicable},
        {"satisfied", c.satisfied},
        {"note", c.note},
    });
  }
  json kf = json::array();
  for (const auto& k : rep.kf_counts) {
    kf.push_back({{"eps_f", real_to_json(k.eps_f)},
                  {"observed", k.observed},
                  {"predicted", opt_real(k.predicted)},
                  {"within_bound", opt(k.within_bound)},
                  {"note", k.note}});
  }
  json contemporary = nullptr;
  if (rep.contemporary) {
    const auto& c = *rep.contemporary;
    contemporary = {
        {"eps_1", real_to_json(c.eps_1)},
        {"K1_observed", c.K1_observed},
        {"K1_bound", real_to_json(c.K1_bound)},
        {"constant", real_to_json(c.constant)},
        {"eps_2", opt_real(c.eps_2)},
        {"K2_observed", opt(c.K2_observed)},
        {"K2_bound", opt_real(c.K2_bound)},
        {"rc_bound", opt_real(c.rc_bound)},
        {"rc_smaller", opt(c.rc_smaller)},
        {"note", c.note},
    };
  }
  json viol = json::array();
  for (const auto& v : rep.violations) {
    viol.push_back({{"k", v.k}, {"kind", v.kind}, {"detail", v.detail}});
  }
  json env = json::array();
  for (const auto& e : envelope) {
    env.push_back({{"k", e.k},
                   {"delta_f_observed", real_to_json(e.delta_f_observed)},
                   {"delta_f_envelope", real_to_json(e.delta_f_envelope)}});
  }
  return json{
      {"schema_version", kReportJsonSchema},
      {"trajectory_id", rep.trajectory_id},
      {"objective", rep.objective_id},
      {"algo", rep.algo},
      {"f_ref", real_to_json(rep.f_ref)},
      {"kappa", real_to_json(rep.kappa)},
      {"kappa_source", rep.kappa_source},
      {"m_hat", rep.m_hat},
      {"calibration", cal},
      {"constants_form",
       "explicit values with hidden O-constants set to 1 and m multiplied in"},
      {"function_class", rep.function_class
                             ? json(function_class_name(*rep.function_class))
                             : json(nullptr)},
      {"scenario",
       rep.scenario ? json(scenario_name(*rep.scenario)) : json(nullptr)},
      {"applicable_checks", rep.applicable_checks},
      {"per_iteration_checks", checks},
      {"kf_counts", kf},
      {"contemporary", contemporary},
      {"envelope", env},
      {"violations", viol},
      {"coverage_note", rep.coverage_note},
  };
}

void write_summary_csv(const VerificationReport& rep, std::ostream& os) {
  os << "k,region,region_next,class,ratio_bound,regime,observed,applicable,"
        "satisfied\n";
  for (const auto& c : rep.checks) {
    os << c.k << ',' << region_name(c.region) << ','
       << region_name(c.region_next) << ','
       << (c.cls ? class_name(*c.cls) : std::string()) << ','
       << (c.applicable ? format_real(c.predicted.ratio_bound) : std::string())
       << ',' << (c.applicable ? regime_name(c.predicted.regime) : std::string())
       << ',' << format_real(c.observed) << ',' << (c.applicable ? 1 : 0) << ','
       << (c.satisfied ? 1 : 0) << '\n';
  }
}

}  // namespace regional
