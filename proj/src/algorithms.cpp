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

#include "regional/algorithms.hpp"

#include <algorithm>
#include <cmath>

#include "regional/subproblems.hpp"

namespace regional {
namespace {

// nu beyond this is treated as a stall (repeated rejections without end).
constexpr double kNuCap = 1e100;
// Default divergence floor for objectives without a known infimum.
constexpr double kDefaultFloor = -1e8;

StepOutcome zero_step(const PointData& pt, double nu) {
  StepOutcome out;
  out.s = Vec::Zero(pt.x.size());
  out.zero_step = true;
  out.nu_next = nu;
  out.x_trial = pt.x;
  out.f_trial = pt.f;
  return out;
}

void trial(const Objective& obj, const PointData& pt, StepOutcome& out) {
  out.x_trial = pt.x + out.s;
  out.f_trial = obj.evaluate(out.x_trial, 0).f;
  out.actual_decrease = pt.f - out.f_trial;
}

// Sufficient decrease with non-finite trial values counted as failure.
bool sufficient(const StepOutcome& out, double required) {
  return std::isfinite(out.f_trial) && out.actual_decrease >= required;
}

const Mat& hessian(const PointData& pt, const char* who) {
  if (!pt.H) throw InputError(std::string(who) + ": Hessian not available");
  return *pt.H;
}

StepOutcome gradient_step(const Objective& obj, const PointData& pt, double l) {
  if (pt.g.norm() == 0.0) return zero_step(pt, l);
  StepOutcome out;
  out.s = -pt.g / l;
  out.model_decrease = pt.g.squaredNorm() / (2.0 * l);
  trial(obj, pt, out);
  return out;
}

StepOutcome tr_step(const Objective& obj, const PointData& pt, double nu,
                    double delta, const AlgoConfig& config, const char* who) {
  if (!(delta > 0.0)) {
    StepOutcome out = zero_step(pt, nu);
    out.delta = delta;
    return out;
  }
  const TrSolution sol = solve_tr(pt.g, hessian(pt, who), delta);
  StepOutcome out;
  out.s = sol.s;
  out.delta = delta;
  out.model_decrease = sol.model_decrease;
  if (out.s.norm() == 0.0) return zero_step(pt, nu);
  trial(obj, pt, out);
  out.accepted = sufficient(out, config.eta * sol.model_decrease);
  out.nu_next = update_nu(nu, out.accepted, config);
  return out;
}

StepOutcome cubic_step(const Objective& obj, const PointData& pt, double sigma,
                       const char* who) {
  const CubicSolution sol = solve_cubic(pt.g, hessian(pt, who), sigma);
  if (sol.s.norm() == 0.0) return zero_step(pt, sigma);
  StepOutcome out;
  out.s = sol.s;
  out.model_decrease = sol.model_decrease;
  trial(obj, pt, out);
  return out;
}

}  // namespace

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::RG: return "rg";
    case Algo::RG_A: return "rg_a";
    case Algo::TR_G: return "tr_g";
    case Algo::TR_H: return "tr_h";
    case Algo::RN: return "rn";
    case Algo::RN_A: return "rn_a";
  }
  return "?";
}

const std::vector<Algo>& all_algos() {
  static const std::vector<Algo> algos{Algo::RG,   Algo::RG_A, Algo::TR_G,
                                       Algo::TR_H, Algo::RN,   Algo::RN_A};
  return algos;
}

Algo algo_from_name(const std::string& name) {
  for (Algo a : all_algos()) {
    if (algo_name(a) == name) return a;
  }
  throw InputError("unknown algorithm: " + name);
}

bool is_adaptive(Algo a) {
  return a == Algo::RG_A || a == Algo::TR_G || a == Algo::TR_H ||
         a == Algo::RN_A;
}

bool is_second_order(Algo a) {
  return a == Algo::TR_G || a == Algo::TR_H || a == Algo::RN || a == Algo::RN_A;
}

std::string termination_name(TerminationReason r) {
  switch (r) {
    case TerminationReason::kEpsFMet: return "eps_f_met";
    case TerminationReason::kFirstOrderMet: return "first_order_met";
    case TerminationReason::kSecondOrderMet: return "second_order_met";
    case TerminationReason::kMaxIters: return "max_iters";
    case TerminationReason::kStalled: return "stalled";
    case TerminationReason::kDiverged: return "diverged";
  }
  return "?";
}

TerminationReason termination_from_name(const std::string& name) {
  for (auto r : {TerminationReason::kEpsFMet, TerminationReason::kFirstOrderMet,
                 TerminationReason::kSecondOrderMet,
                 TerminationReason::kMaxIters, TerminationReason::kStalled,
                 TerminationReason::kDiverged}) {
    if (termination_name(r) == name) return r;
  }
  throw InputError("unknown termination reason: " + name);
}

void validate(const AlgoConfig& c) {
  if (!(c.eta > 0.0 && c.eta < 1.0)) throw InputError("eta must lie in (0, 1)");
  if (!(c.psi > 1.0)) throw InputError("psi must exceed 1");
  if (!(c.nu_min > 0.0 && c.nu_min <= c.nu_max)) {
    throw InputError("need 0 < nu_min <= nu_max");
  }
  if (c.nu0 && !(*c.nu0 > 0.0)) throw InputError("nu0 must be positive");
  if (!(c.l1 > 0.0)) throw InputError("l1 must be positive");
  if (!(c.l2 > 0.0)) throw InputError("l2 must be positive");
  if (c.max_iters < 1) throw InputError("max_iters must be positive");
  const auto& t = c.termination;
  for (const auto& e : {t.eps_f, t.eps_1, t.eps_2}) {
    if (e && !(*e > 0.0)) throw InputError("tolerances must be positive");
  }
}

PointData evaluate_point(const Objective& obj, const Vec& x, bool want_hessian) {
  const Evaluation e = obj.evaluate(x, want_hessian ? 2 : 1);
  PointData pt;
  pt.x = x;
  pt.f = e.f;
  pt.g = *e.g;
  pt.hessian_nonsmooth = e.hessian_nonsmooth;
  if (want_hessian) {
    pt.H = *e.H;
    if (std::isfinite(e.f) && e.H->allFinite()) {
      pt.lambda_min = leftmost_eig(*e.H).lambda;
    }
  }
  return pt;
}

double update_nu(double nu, bool accepted, const AlgoConfig& config) {
  if (!accepted) return config.psi * nu;
  if (config.nu_reset == NuReset::kToMin) return config.nu_min;
  return std::clamp(nu, config.nu_min, config.nu_max);
}

StepOutcome step_rg(const Objective& obj, const PointData& pt,
                    const AlgoConfig& config) {
  StepOutcome out = gradient_step(obj, pt, config.l1);
  out.accepted = !out.zero_step;
  return out;
}

StepOutcome step_rga(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config) {
  StepOutcome out = gradient_step(obj, pt, nu);
  if (out.zero_step) return out;
  out.accepted = sufficient(out, config.eta / (2.0 * nu) * pt.g.squaredNorm());
  out.nu_next = update_nu(nu, out.accepted, config);
  return out;
}

StepOutcome step_trg(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config) {
  return tr_step(obj, pt, nu, pt.g.norm() / nu, config, "tr_g");
}

StepOutcome step_trh(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config) {
  hessian(pt, "tr_h");
  const double gn = pt.g.norm();
  const double lm = pt.lambda_minus();
  const double delta = gn * gn >= lm * lm * lm ? gn / nu : lm / nu;
  return tr_step(obj, pt, nu, delta, config, "tr_h");
}

StepOutcome step_rn(const Objective& obj, const PointData& pt,
                    const AlgoConfig& config) {
  StepOutcome out = cubic_step(obj, pt, config.l2, "rn");
  out.accepted = !out.zero_step;
  return out;
}

StepOutcome step_rna(const Objective& obj, const PointData& pt, double nu,
                     const AlgoConfig& config) {
  StepOutcome out = cubic_step(obj, pt, nu, "rn_a");
  if (out.zero_step) return out;
  out.accepted = sufficient(out, config.eta * out.model_decrease);
  out.nu_next = update_nu(nu, out.accepted, config);
  return out;
}

StepOutcome take_step(const Objective& obj, const PointData& pt, double nu,
                      const AlgoConfig& config) {
  switch (config.algo) {
    case Algo::RG: return step_rg(obj, pt, config);
    case Algo::RG_A: return step_rga(obj, pt, nu, config);
    case Algo::TR_G: return step_trg(obj, pt, nu, config);
    case Algo::TR_H: return step_trh(obj, pt, nu, config);
    case Algo::RN: return step_rn(obj, pt, config);
    case Algo::RN_A: return step_rna(obj, pt, nu, config);
  }
  throw InputError("unknown algorithm");
}

Trajectory run(const Objective& obj, const AlgoConfig& config,
               const RegionParams& region_params, const Vec& x0) {
  validate(config);
  if (!(region_params.kappa > 0.0)) throw InputError("kappa must be positive");
  if (x0.size() != obj.n()) {
    throw InputError("x0 has dimension " + std::to_string(x0.size()) +
                     ", objective " + obj.id() + " has n = " +
                     std::to_string(obj.n()));
  }
  const bool second = is_second_order(config.algo);
  if (second && obj.smoothness_order() < 2) {
    throw InputError("objective " + obj.id() +
                     " is only once continuously differentiable; " +
                     algo_name(config.algo) + " needs second derivatives");
  }
  const bool adaptive = is_adaptive(config.algo);
  const bool want_h = obj.hessian_available();
  std::optional<double> floor = config.divergence_floor;
  if (!floor && !obj.f_inf()) floor = kDefaultFloor;
  const auto& tol = config.termination;

  Trajectory traj;
  traj.config = config;
  traj.objective_id = obj.id();
  traj.n = obj.n();
  traj.f_inf = obj.f_inf();
  traj.region_params = region_params;

  double nu = config.nu0.value_or(config.nu_min);
  PointData pt = evaluate_point(obj, x0, want_h);
  for (int k = 0;; ++k) {
    IterateRecord rec;
    rec.k = k;
    rec.x = pt.x;
    rec.f = pt.f;
    rec.grad_norm = pt.g.norm();
    if (pt.lambda_min) rec.lambda_minus = pt.lambda_minus();
    if (adaptive) rec.nu = nu;
    rec.delta_f = pt.f - region_params.f_ref;
    rec.region = classify_witness(
        {rec.delta_f, rec.grad_norm, rec.lambda_minus}, region_params);

    auto finish = [&](TerminationReason reason) {
      traj.records.push_back(rec);
      traj.termination = reason;
    };
    if (!std::isfinite(pt.f) || !pt.g.allFinite() ||
        (floor && pt.f < *floor)) {
      finish(TerminationReason::kDiverged);
      break;
    }
    if (tol.eps_f && obj.f_inf() && pt.f - *obj.f_inf() <= *tol.eps_f) {
      finish(TerminationReason::kEpsFMet);
      break;
    }
    const double lm = pt.lambda_minus();
    if (tol.eps_1 && rec.grad_norm <= *tol.eps_1) {
      if (!second || !tol.eps_2) {
        finish(TerminationReason::kFirstOrderMet);
        break;
      }
      if (lm <= *tol.eps_2) {
        finish(TerminationReason::kSecondOrderMet);
        break;
      }
    }
    if (second && rec.grad_norm == 0.0 && lm == 0.0) {
      finish(TerminationReason::kSecondOrderMet);
      break;
    }
    if (k >= config.max_iters) {
      finish(TerminationReason::kMaxIters);
      break;
    }
    if (adaptive && !(nu <= kNuCap)) {
      finish(TerminationReason::kStalled);
      break;
    }

    const StepOutcome out = take_step(obj, pt, nu, config);
    rec.delta = out.delta;
    if (out.zero_step) {
      finish(TerminationReason::kStalled);
      break;
    }
    if (out.accepted && out.x_trial == pt.x) {
      finish(TerminationReason::kStalled);
      break;
    }
    rec.step_norm = out.s.norm();
    rec.accepted = out.accepted;
    rec.model_decrease = out.model_decrease;
    traj.records.push_back(rec);
    if (out.accepted) pt = evaluate_point(obj, out.x_trial, want_h);
    if (adaptive) nu = out.nu_next;
  }
  return traj;
}

}  // namespace regional
