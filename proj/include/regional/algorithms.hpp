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

#ifndef REGIONAL_ALGORITHMS_HPP_
#define REGIONAL_ALGORITHMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "regional/objective.hpp"
#include "regional/regions.hpp"

namespace regional {

enum class Algo { RG, RG_A, TR_G, TR_H, RN, RN_A };

std::string algo_name(Algo a);  // "rg", "rg_a", ...
Algo algo_from_name(const std::string& name);
const std::vector<Algo>& all_algos();

// Methods that keep and update nu.
bool is_adaptive(Algo a);
// Methods that need the Hessian at every iterate.
bool is_second_order(Algo a);

enum class NuReset { kClamp, kToMin };

struct TerminationTolerances {
  std::optional<double> eps_f;
  std::optional<double> eps_1;
  std::optional<double> eps_2;
};

struct AlgoConfig {
  Algo algo = Algo::RG;
  double l1 = 1.0;
  double l2 = 1.0;
  double eta = 0.1;
  double psi = 2.0;
  double nu_min = 1e-3;
  double nu_max = 1e3;
  std::optional<double> nu0;  // defaults to nu_min
  NuReset nu_reset = NuReset::kClamp;
  int max_iters = 1000;
  TerminationTolerances termination;
  std::optional<double> divergence_floor;
};

// Throws InputError for inconsistent parameters.
void validate(const AlgoConfig& config);

// Cached derivative information at one iterate.
struct PointData {
  Vec x;
  double f = 0.0;
  Vec g;
  std::optional<Mat> H;
  std::optional<double> lambda_min;
  bool hessian_nonsmooth = false;

  double lambda_minus() const {
    return lambda_min ? std::max(0.0, -*lambda_min) : 0.0;
  }
};

// Evaluates f, g and (when available) H with its leftmost eigenvalue.
PointData evaluate_point(const Objective& obj, const Vec& x, bool want_hessian);

struct StepOutcome {
  Vec s;
  bool accepted = false;
  bool zero_step = false;
  double nu_next = 0.0;
  std::optional<double> delta;
  double model_decrease = 0.0;
  double actual_decrease = 0.0;
  Vec x_trial;
  double f_trial = 0.0;
};

StepOutcome step_rg(const Objective& obj, const PointData& pt,
                    const AlgoConfig& config);
StepOutcome step_rga(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config);
StepOutcome step_trg(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config);
StepOutcome step_trh(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config);
StepOutcome step_rn(const Objective& obj, const PointData& pt,
                    const AlgoConfig& config);
StepOutcome step_rna(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config);
StepOutcome take_step(const Objective& obj, const PointData& pt, double nu,
                      const AlgoConfig& config);

// nu for the next iterate after an accept/reject decision.
double update_nu(double nu, bool accepted, const AlgoConfig& config);

struct IterateRecord {
  int k = 0;
  Vec x;
  double f = 0.0;
  double grad_norm = 0.0;
  std::optional<double> lambda_minus;
  std::optional<double> nu;
  std::optional<double> delta;
  double step_norm = 0.0;
  bool accepted = false;
  double model_decrease = 0.0;
  RegionLabel region;
  double delta_f = 0.0;
};

enum class TerminationReason {
  kEpsFMet,
  kFirstOrderMet,
  kSecondOrderMet,
  kMaxIters,
  kStalled,
  kDiverged,
};

std::string termination_name(TerminationReason r);
TerminationReason termination_from_name(const std::string& name);

struct Trajectory {
  AlgoConfig config;
  std::string objective_id;
  int n = 0;
  std::optional<double> f_inf;
  RegionParams region_params;
  std::vector<IterateRecord> records;
  TerminationReason termination = TerminationReason::kMaxIters;
};

// Runs the method from x0. One record per iterate, including rejected trials
// (x unchanged) and a terminal record with no step.
Trajectory run(const Objective& obj, const AlgoConfig& config,
               const RegionParams& region_params, const Vec& x0);

}  // namespace regional

#endif  // REGIONAL_ALGORITHMS_HPP_
