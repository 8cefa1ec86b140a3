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

#include "regional/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regional {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RateBound make(double ratio, Regime regime) {
  RateBound b;
  b.ratio_bound = ratio;
  b.regime = regime;
  if (!std::isfinite(ratio) || ratio < 0.0 || ratio > 1.0) {
    b.applicable = false;
    b.reason = "ratio outside [0, 1]";
  } else {
    b.applicable = true;
  }
  return b;
}

RateBound inapplicable(std::string reason) {
  RateBound b;
  b.applicable = false;
  b.reason = std::move(reason);
  return b;
}

// Gradient-region templates when the decrease is measured by
// ||g_{k+m}||^{(p+1)/p}; p = 2 is the Newton class.
RateBound gradient_region_p(Region region, int p, const RateContext& ctx,
                            double df) {
  const double k = ctx.kappa, z = ctx.zeta;
  const double pp = p;
  if (region == Region::R1_2) {
    if (p == 1) {
      return inapplicable("order 1 threshold exponent 1/(p-1) is undefined");
    }
    const double thr = std::pow(std::pow(k, pp + 1) / std::pow(z, 2 * pp),
                                1.0 / (pp - 1));
    if (df >= thr) {
      // The factor is increasing in the gap, so f0 bounds every later step.
      const double a = std::pow(std::max(ctx.f0_gap, df), (pp - 1) / (2 * pp));
      return make(a / (std::pow(k, (pp + 1) / (2 * pp)) / z + a),
                  Regime::kLinear);
    }
    return make(std::pow(df / thr, (pp - 1) / (pp + 1)), Regime::kSuperlinear);
  }
  const double thr = std::pow(z, pp) / std::pow(k, pp + 1);
  if (df >= thr) {
    return make(std::pow(thr / df, 1.0 / (pp + 1)), Regime::kSuperlinear);
  }
  const double c = std::pow(2.0, 1.0 / pp);
  const double denom =
      1.0 + std::pow(k, (pp + 1) / pp) / z * ((c - 1.0) / c) *
                std::pow(df, 1.0 / pp);
  return make(std::pow(1.0 / denom, pp), Regime::kSublinear);
}

}  // namespace

std::string class_name(AlgoClass c) {
  switch (c) {
    case AlgoClass::kGrad: return "grad";
    case AlgoClass::kNewton: return "newton";
    case AlgoClass::kCurvature: return "curvature";
    case AlgoClass::kP: return "p";
  }
  return "?";
}

AlgoClass class_from_name(const std::string& name) {
  for (auto c : {AlgoClass::kGrad, AlgoClass::kNewton, AlgoClass::kCurvature,
                 AlgoClass::kP}) {
    if (class_name(c) == name) return c;
  }
  throw InputError("unknown algorithm class: " + name);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kLinear: return "linear";
    case Regime::kSublinear: return "sublinear";
    case Regime::kSuperlinear: return "superlinear";
    case Regime::kNone: return "none";
  }
  return "none";
}

RateBound rate_template(Region region, const RateContext& ctx,
                        double delta_f_k) {
  if (!(delta_f_k >= 0.0)) {
    throw InputError("rate_template: delta_f_k must be nonnegative");
  }
  if (!(ctx.kappa > 0.0 && ctx.zeta > 0.0)) {
    throw InputError("rate_template: kappa and zeta must be positive");
  }
  const double k = ctx.kappa, z = ctx.zeta, df = delta_f_k;
  switch (ctx.algo_class) {
    case AlgoClass::kGrad:
      if (!in_r1(region)) {
        return inapplicable("gradient-step class has no template outside R1");
      }
      if (k > z) return inapplicable("kappa exceeds zeta");
      if (region == Region::R1_2) return make(1.0 - k / z, Regime::kLinear);
      return make(1.0 - k * k / z * df, Regime::kSublinear);
    case AlgoClass::kNewton:
      if (!in_r1(region)) {
        return inapplicable("Newton class template needs x_{k+m} in R1");
      }
      return gradient_region_p(region, 2, ctx, df);
    case AlgoClass::kP:
      if (ctx.p < 1) throw InputError("rate_template: p must be positive");
      if (in_r1(region)) return gradient_region_p(region, ctx.p, ctx, df);
      if (in_r2(region) && ctx.p == 2) {
        const int q = region == Region::R2_3 ? 3 : region == Region::R2_2 ? 2 : 1;
        return rate_template_pq(2, q, ctx, df);
      }
      return inapplicable("no order-p template for region " +
                          region_name(region));
    case AlgoClass::kCurvature:
      if (!in_r2(region)) {
        return inapplicable("curvature class template needs x_k in R2");
      }
      if (k > z) return inapplicable("kappa exceeds zeta");
      if (region == Region::R2_3) return make(1.0 - k / z, Regime::kLinear);
      if (region == Region::R2_2) {
        return make(1.0 - std::pow(k, 1.5) / z * std::sqrt(df),
                    Regime::kSublinear);
      }
      return make(1.0 - k * k * k / z * df * df, Regime::kSublinear);
  }
  return inapplicable("unknown class");
}

RateBound rate_template_pq(int p, int q, const RateContext& ctx,
                           double delta_f_k) {
  if (p < 1 || q < 1 || q > p + 1) {
    throw InputError("rate_template_pq: need 1 <= q <= p + 1");
  }
  if (!(delta_f_k >= 0.0)) {
    throw InputError("rate_template_pq: delta_f_k must be nonnegative");
  }
  const double k = ctx.kappa, z = ctx.zeta;
  RateBound b;
  if (q == p + 1) {
    b = make(1.0 - k / z, Regime::kLinear);
  } else {
    b = make(1.0 - std::pow(k, double(p + 1) / q) / z *
                       std::pow(delta_f_k, double(p + 1 - q) / q),
             Regime::kSublinear);
  }
  if (k > z) {
    b.applicable = false;
    b.reason = "kappa exceeds zeta";
  }
  if (p == 1) {
    // At p = 1 the order-p hypothesis bounds the decrease by ||g||^4, not the
    // ||g||^2 of the gradient class; the value is reported but not used.
    b.applicable = false;
    b.reason =
        "order-1 hypothesis uses (||g||^2)^2 = ||g||^4, gradient class uses "
        "||g||^2; value reported literally";
  }
  return b;
}

std::string function_class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::gH_23: return "gH_23";
    case FunctionClass::gH_11: return "gH_11";
    case FunctionClass::gd_2: return "gd_2";
    case FunctionClass::gd_1: return "gd_1";
  }
  return "?";
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kStrong: return "strong";
    case Scenario::kCurvatureSqrt: return "curvature_sqrt";
    case Scenario::kGradientWeak: return "gradient_weak";
    case Scenario::kCurvatureWeak: return "curvature_weak";
  }
  return "?";
}

double linear_factor(Algo algo, double kappa, double zeta, double delta_f0) {
  const double base = 1.0 - kappa / zeta;
  if (algo != Algo::RN && algo != Algo::RN_A) return base;
  const double a = std::pow(delta_f0, 0.25);
  return std::max(base, a / (std::pow(kappa, 0.75) / zeta + a));
}

namespace {

double linear_iters(double from, double to, double xi, int m) {
  if (from <= to) return 0.0;
  if (xi <= 0.0) return m;
  if (xi >= 1.0) return kInf;
  return m * std::ceil(std::log(from / to) / -std::log(xi));
}

bool allowed(FunctionClass fc, Scenario s) {
  switch (fc) {
    case FunctionClass::gH_23:
    case FunctionClass::gd_2: return s == Scenario::kStrong;
    case FunctionClass::gH_11: return true;
    case FunctionClass::gd_1:
      return s == Scenario::kStrong || s == Scenario::kGradientWeak;
  }
  return false;
}

}  // namespace

ComplexityBound complexity_bound(FunctionClass fc, Algo algo,
                                 const ComplexityInputs& in) {
  const bool gh = fc == FunctionClass::gH_23 || fc == FunctionClass::gH_11;
  if (gh && !is_second_order(algo)) {
    throw InputError("class " + function_class_name(fc) +
                     " is not covered for " + algo_name(algo));
  }
  if (gh && algo == Algo::TR_G) {
    throw InputError("class " + function_class_name(fc) +
                     " is not covered for tr_g: zero-norm steps at points "
                     "with g = 0 and negative curvature");
  }
  if (!allowed(fc, in.scenario)) {
    throw InputError("scenario " + scenario_name(in.scenario) +
                     " is not admissible for class " + function_class_name(fc));
  }
  if (!(in.kappa > 0.0 && in.zeta > 0.0 && in.m >= 1 && in.eps_f > 0.0 &&
        in.delta_f0 >= 0.0)) {
    throw InputError("complexity_bound: invalid inputs");
  }
  const double k = in.kappa, z = in.zeta, eps = in.eps_f;
  const int m = in.m;
  const bool newton = algo == Algo::RN || algo == Algo::RN_A;
  ComplexityBound out;
  out.xi = linear_factor(algo, k, z, in.delta_f0);
  if (in.delta_f0 <= eps) {
    out.order_expression = "0";
    return out;
  }
  auto add = [&](std::string name, Regime r, double iters, double from,
                 double to) {
    out.phases.push_back({std::move(name), r, iters, from, to});
    out.iterations += iters;
  };

  if (in.scenario == Scenario::kStrong) {
    const double omega = k * k * k / std::pow(z, 4);
    const bool superlinear_tail = newton && eps < omega;
    if (!superlinear_tail) {
      add("linear", Regime::kLinear,
          linear_iters(in.delta_f0, eps, out.xi, m), in.delta_f0, eps);
      out.order_expression = "m*log(df0/eps_f)/(-log(xi))";
      return out;
    }
    double start = in.delta_f0;
    if (in.delta_f0 > omega) {
      start = out.xi * omega;
      add("linear", Regime::kLinear,
          linear_iters(in.delta_f0, start, out.xi, m), in.delta_f0, start);
    }
    const double j =
        std::log(std::log(omega / eps) / std::log(omega / start)) /
        std::log(4.0 / 3.0);
    add("superlinear", Regime::kSuperlinear, m * std::ceil(std::max(0.0, j)),
        start, eps);
    out.order_expression =
        "m*log(df0/omega)/(-log(xi)) + m*log(log(omega/eps_f)/"
        "log(omega/df_hat))/log(4/3), omega = kappa^3/zeta^4";
    return out;
  }

  // Weaker scenarios: linear until the gap drops below 1/kappa, then a
  // sublinear tail.
  double d = 1.0 / k;
  if (in.delta_f0 > d) {
    add("linear", Regime::kLinear, linear_iters(in.delta_f0, d, out.xi, m),
        in.delta_f0, d);
  } else {
    d = in.delta_f0;
  }
  if (eps >= d) {
    out.order_expression = "m*log(df0*kappa)/(-log(xi))";
    return out;
  }
  double j = 0.0;
  std::string tail;
  const bool sqrt_tail =
      in.scenario == Scenario::kCurvatureSqrt ||
      (in.scenario == Scenario::kGradientWeak && newton);
  if (sqrt_tail) {
    const double c = std::pow(k, 1.5) / z * (std::sqrt(2.0) - 1.0) / std::sqrt(2.0);
    j = (1.0 / std::sqrt(eps) - 1.0 / std::sqrt(d)) / c;
    tail = "(1/kappa)/sqrt(eps_f)";
  } else if (in.scenario == Scenario::kGradientWeak) {
    j = (1.0 / eps - 1.0 / d) * z / (k * k);
    tail = "(1/kappa)/eps_f";
  } else {
    j = (1.0 / (eps * eps) - 1.0 / (d * d)) * z / (k * k * k);
    tail = "(1/kappa)/eps_f^2";
  }
  add("sublinear", Regime::kSublinear, m * std::ceil(std::max(0.0, j)), d, eps);
  out.order_expression = "m*log(df0*kappa)/(-log(xi)) + m*O(" + tail + ")";
  return out;
}

ContemporaryBound contemporary_bound(Algo algo, double eps_1, double eps_2,
                                     double delta_f0, double constant) {
  if (!(eps_1 > 0.0 && eps_2 > 0.0)) {
    throw InputError("contemporary_bound: tolerances must be positive");
  }
  ContemporaryBound b;
  const bool newton = algo == Algo::RN || algo == Algo::RN_A;
  b.K1 = constant * delta_f0 / (newton ? std::pow(eps_1, 1.5) : eps_1 * eps_1);
  const bool no_curvature =
      algo == Algo::RG || algo == Algo::RG_A || algo == Algo::TR_G;
  b.K2 = no_curvature ? kInf : constant * delta_f0 / (eps_2 * eps_2 * eps_2);
  return b;
}

}  // namespace regional
