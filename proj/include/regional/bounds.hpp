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

#ifndef REGIONAL_BOUNDS_HPP_
#define REGIONAL_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "regional/algorithms.hpp"
#include "regional/regions.hpp"

namespace regional {

// Per-iteration decrease inequalities the rate templates are built on:
//   kGrad:      f_k - f_{k+m} >= ||g_k||^2 / zeta
//   kNewton:    f_k - f_{k+m} >= ||g_{k+m}||^{3/2} / zeta
//   kCurvature: f_k - f_{k+m} >= lambda_-(H_k)^3 / zeta
//   kP:         order-p generalisation (p from RateContext::p)
enum class AlgoClass { kGrad, kNewton, kCurvature, kP };

std::string class_name(AlgoClass c);
AlgoClass class_from_name(const std::string& name);

struct RateContext {
  AlgoClass algo_class = AlgoClass::kGrad;
  int p = 2;  // only for kP
  double kappa = 1.0;
  double zeta = 1.0;
  int m = 1;
  double f0_gap = 0.0;  // f_0 - f_ref, used by the linear Newton branch
};

enum class Regime { kLinear, kSublinear, kSuperlinear, kNone };
std::string regime_name(Regime r);

struct RateBound {
  double ratio_bound = 1.0;  // bound on (f_{k+m} - f_ref) / (f_k - f_ref)
  Regime regime = Regime::kNone;
  bool applicable = false;
  std::string reason;
};

// Template for a region label. kNewton and kP use the gradient-region
// variants (label of x_{k+m}); kCurvature uses the curvature subregions.
RateBound rate_template(Region region, const RateContext& ctx,
                        double delta_f_k);

// Order-p template indexed by subregion q in {1, ..., p + 1}.
RateBound rate_template_pq(int p, int q, const RateContext& ctx,
                           double delta_f_k);

enum class FunctionClass { gH_23, gH_11, gd_2, gd_1 };
std::string function_class_name(FunctionClass c);

// Which subregion keeps recurring after the linear phase.
//   kStrong:        R1_2 / R2_3 only
//   kCurvatureSqrt: R2_2 recurs
//   kGradientWeak:  R1_1 recurs
//   kCurvatureWeak: R2_1 recurs
enum class Scenario { kStrong, kCurvatureSqrt, kGradientWeak, kCurvatureWeak };
std::string scenario_name(Scenario s);

struct ComplexityInputs {
  double kappa = 1.0;
  double zeta = 1.0;
  int m = 1;
  double delta_f0 = 1.0;
  double eps_f = 1e-6;
  Scenario scenario = Scenario::kStrong;
};

struct Phase {
  std::string name;
  Regime regime = Regime::kLinear;
  double iterations = 0.0;
  double gap_from = 0.0;
  double gap_to = 0.0;
};

struct ComplexityBound {
  double iterations = 0.0;  // integer valued, or +inf
  double xi = 0.0;
  std::vector<Phase> phases;
  std::string order_expression;
};

// Contraction factor of the linear phase.
double linear_factor(Algo algo, double kappa, double zeta, double delta_f0);

// Throws InputError for (class, algorithm) or (class, scenario) pairs the
// analysis does not cover.
ComplexityBound complexity_bound(FunctionClass fc, Algo algo,
                                 const ComplexityInputs& in);

struct ContemporaryBound {
  double K1 = 0.0;  // +inf when no bound exists
  double K2 = 0.0;
};

// Order-constant-free values multiplied by `constant`.
ContemporaryBound contemporary_bound(Algo algo, double eps_1, double eps_2,
                                     double delta_f0, double constant = 1.0);

}  // namespace regional

#endif  // REGIONAL_BOUNDS_HPP_
