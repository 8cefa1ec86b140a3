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

#ifndef REGIONAL_HARNESS_HPP_
#define REGIONAL_HARNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "regional/algorithms.hpp"
#include "regional/bounds.hpp"

namespace regional {

inline constexpr double kRatioTolerance = 1e-10;

// Number of records with f_k - f_inf > eps_f.
long count_Kf(const Trajectory& traj, double eps_f, double f_inf);
// Records with ||g_k|| > eps_1, resp. lambda_-(H_k) > eps_2.
long count_K1(const Trajectory& traj, double eps_1);
long count_K2(const Trajectory& traj, double eps_2);

// Longest run of consecutive rejected steps.
int max_rejection_run(const Trajectory& traj);

struct Calibration {
  double zeta_hat = 0.0;
  int m_hat = 1;
  int windows = 0;  // windows with positive decrease and positive measure
};

// m_hat = 1 + longest rejection run (unless m is given); zeta_hat is the
// largest measure / (f_k - f_{k+m}) over all windows.
Calibration calibrate_zeta_m(const Trajectory& traj, AlgoClass cls,
                             std::optional<int> m = std::nullopt);

// Decrease classes used for the gradient and curvature regions.
AlgoClass r1_class(Algo algo);
std::optional<AlgoClass> r2_class(Algo algo);

enum class KappaSource { kTrajectory, kRecommended };

struct VerifyOptions {
  KappaSource kappa_source = KappaSource::kTrajectory;
  std::optional<double> kappa;  // explicit value wins over kappa_source
  std::optional<double> zeta;   // overrides every class
  std::optional<int> m;
  std::vector<double> eps_f_list{1e-2, 1e-4, 1e-6, 1e-8};
  std::optional<double> eps_1;
  std::optional<double> eps_2;
};

struct ClassCalibration {
  AlgoClass cls = AlgoClass::kGrad;
  double zeta = 0.0;
  std::string source;  // analytic, empirical, override
  int windows = 0;
};

struct Check {
  int k = 0;
  Region region = Region::Unknown;       // label of x_k
  Region region_next = Region::Unknown;  // label of x_{k+m}
  std::optional<AlgoClass> cls;          // template that set the bound
  RateBound predicted;
  double observed = 0.0;
  bool applicable = false;
  bool satisfied = true;
  std::string note;
};

struct Violation {
  int k = 0;
  std::string kind;  // rate, monotonicity, rejected_step_moved
  std::string detail;
};

struct KfCount {
  double eps_f = 0.0;
  long observed = 0;
  std::optional<double> predicted;
  std::optional<bool> within_bound;
  std::string note;
};

struct ContemporaryComparison {
  double eps_1 = 0.0;
  long K1_observed = 0;
  double K1_bound = 0.0;
  double constant = 1.0;
  std::optional<double> eps_2;
  std::optional<long> K2_observed;
  std::optional<double> K2_bound;
  std::optional<double> rc_bound;  // region-based bound on |K1|
  std::optional<bool> rc_smaller;
  std::string note;
};

struct VerificationReport {
  std::string trajectory_id;
  std::string objective_id;
  std::string algo;
  double f_ref = 0.0;
  double kappa = 0.0;
  std::string kappa_source;
  int m_hat = 1;
  std::vector<ClassCalibration> calibration;
  std::optional<FunctionClass> function_class;
  std::optional<Scenario> scenario;
  std::vector<Check> checks;
  int applicable_checks = 0;
  std::vector<KfCount> kf_counts;
  std::optional<ContemporaryComparison> contemporary;
  std::vector<Violation> violations;
  std::string coverage_note;

  std::optional<double> zeta_for(AlgoClass cls) const;
};

// Gaps at or below this are treated as numerical noise.
double resolution_floor(double f_ref);

VerificationReport verify_run(const Trajectory& traj,
                              const RegionParams& region_params,
                              const VerifyOptions& options = {});

struct EnvelopePoint {
  int k = 0;
  double delta_f_observed = 0.0;
  double delta_f_envelope = 0.0;
};

// Envelope composed from the per-check ratio bounds at checkpoints
// 0, m, 2m, ... (ratio 1 where no template applies).
std::vector<EnvelopePoint> envelope_compare(const Trajectory& traj,
                                            const VerificationReport& report);

}  // namespace regional

#endif  // REGIONAL_HARNESS_HPP_
