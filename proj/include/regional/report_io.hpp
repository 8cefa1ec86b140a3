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

#ifndef REGIONAL_REPORT_IO_HPP_
#define REGIONAL_REPORT_IO_HPP_

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "regional/harness.hpp"

namespace regional {

inline constexpr const char* kReportJsonSchema = "regional.report/1";
inline constexpr const char* kSummaryCsvSchema = "report-summary-csv/1";

nlohmann::json report_to_json(const VerificationReport& report,
                              const std::vector<EnvelopePoint>& envelope);

// One row per check: k, region, region_next, class, ratio_bound, regime,
// observed, applicable, satisfied.
void write_summary_csv(const VerificationReport& report, std::ostream& os);

}  // namespace regional

#endif  // REGIONAL_REPORT_IO_HPP_
