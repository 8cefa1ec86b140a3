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

#ifndef REGIONAL_TRAJECTORY_IO_HPP_
#define REGIONAL_TRAJECTORY_IO_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "regional/algorithms.hpp"
#include "regional/regions.hpp"

namespace regional {

inline constexpr const char* kTrajectoryCsvSchema = "trajectory-csv/1";
inline constexpr const char* kTrajectoryJsonSchema = "regional.trajectory/1";
inline constexpr const char* kScanCsvSchema = "region-scan-csv/1";

// Columns: k, x0..x{n-1}, f, grad_norm, lambda_minus, nu, delta, step_norm,
// accepted, region, delta_f. Reals use 17 significant digits; absent optional
// values are empty fields.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

nlohmann::json trajectory_to_json(const Trajectory& traj);
// Throws InputError on schema mismatch or malformed content.
Trajectory trajectory_from_json(const nlohmann::json& j);

// Columns: x0..x{n-1}, label, delta_f, grad_norm, lambda_minus.
void write_scan_csv(const RegionScan& scan, std::ostream& os);

// 17 significant digits; inf, -inf and nan spelled out.
std::string format_real(double v);
nlohmann::json real_to_json(double v);
double real_from_json(const nlohmann::json& j);

}  // namespace regional

#endif  // REGIONAL_TRAJECTORY_IO_HPP_
