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

#ifndef REGIONAL_REGIONS_HPP_
#define REGIONAL_REGIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "regional/objective.hpp"

namespace regional {

struct RegionParams {
  double kappa = 1.0;
  double f_ref = 0.0;
};

// Unknown is only produced in first-order-only mode, for points that fail the
// gradient test and therefore cannot be placed without curvature information.
enum class Region { R1_1, R1_2, R2_1, R2_2, R2_3, Outside, BelowRef, Unknown };

std::string region_name(Region r);
// Throws InputError for unrecognised names.
Region region_from_name(const std::string& name);

inline bool in_r1(Region r) { return r == Region::R1_1 || r == Region::R1_2; }
inline bool in_r2(Region r) {
  return r == Region::R2_1 || r == Region::R2_2 || r == Region::R2_3;
}

struct Witness {
  double delta_f = 0.0;
  double grad_norm = 0.0;
  std::optional<double> lambda_minus;
};

struct RegionLabel {
  Region region = Region::Unknown;
  Witness witness;
};

// Classification from precomputed quantities. A missing lambda_minus yields
// Unknown for points outside the gradient region.
RegionLabel classify_witness(const Witness& w, const RegionParams& params);

// Throws InputError when curvature is needed and the objective has no Hessian,
// unless first_order_only is set.
RegionLabel classify(const Objective& obj, const Vec& x,
                     const RegionParams& params, bool first_order_only = false);

// ||g||^2 for p = 1, (lambda_min(H))_-^3 for p = 2.
double delta_p(const Objective& obj, const Vec& x, int p);
double delta_p_values(const Vec& g, const std::optional<Mat>& H, int p);

struct PLabel {
  enum class Status { kMember, kLowerRegion, kOutside, kBelowRef };
  Status status = Status::kOutside;
  int p = 1;
  int q = 0;  // subregion index when status == kMember
};

// Membership in the order-p region with measure Delta_p, exponent range
// [1, p + 1]. Points in lower-order regions are excluded first.
PLabel classify_p(const Objective& obj, const Vec& x, int p,
                  const RegionParams& params);
PLabel classify_p_values(const std::vector<double>& deltas, double delta_f,
                         int p, double kappa);

struct RegionScan {
  std::vector<Vec> points;
  std::vector<RegionLabel> labels;
  int resolution = 0;
};

RegionScan region_scan(const Objective& obj, int resolution,
                       const RegionParams& params);

}  // namespace regional

#endif  // REGIONAL_REGIONS_HPP_
