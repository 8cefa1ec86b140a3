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

#include "regional/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace regional {
namespace {

double lm_of(const IterateRecord& r) { return r.lambda_minus.value_or(0.0); }

double measure(const Trajectory& traj, AlgoClass cls, size_t k, int m) {
  const auto& recs = traj.records;
  switch (cls) {
    case AlgoClass::kGrad: return recs[k].grad_norm * recs[k].grad_norm;
    case AlgoClass::kNewton: return std::pow(recs[k + m].grad_norm, 1.5);
    case AlgoClass::kCurvature: {
      const double l = lm_of(recs[k]);
      return l * l * l;
    }
    case AlgoClass::kP: break;
  }
  throw InputError("calibration is not defined for the order-p class");
}

std::optional<FunctionClass> infer_class(const std::set<Region>& labels) {
  if (labels.empty()) return std::nullopt;
  bool all_r1 = true, all_r12 = true, strong = true, only_r12 = true;
  for (Region r : labels) {
    all_r1 = all_r1 && in_r1(r);
    all_r12 = all_r12 && (in_r1(r) || in_r2(r));
    strong = strong && (r == Region::R1_2 || r == Region::R2_3);
    only_r12 = only_r12 && r == Region::R1_2;
  }
  if (only_r12) return FunctionClass::gd_2;
  if (strong) return FunctionClass::gH_23;
  if (all_r1) return FunctionClass::gd_1;
  if (all_r12) return FunctionClass::gH_11;
  return std::nullopt;
}

Scenario infer_scenario(const std::set<Region>& labels) {
  if (labels.count(Region::R2_1)) return Scenario::kCurvatureWeak;
  if (labels.count(Region::R2_2)) return Scenario::kCurvatureSqrt;
  if (labels.count(Region::R1_1)) return Scenario::kGradientWeak;
  return Scenario::kStrong;
}

}  // namespace

long count_Kf(const Trajectory& traj, double eps_f, double f_inf) {
  if (!std::isfinite(f_inf)) throw InputError("count_Kf: f_inf must be finite");
  return std::count_if(traj.records.begin(), traj.records.end(),
                       [&](const IterateRecord& r) { return r.f - f_inf > eps_f; });
}

long count_K1(const Trajectory& traj, double eps_1) {
  return std::count_if(traj.records.begin(), traj.records.end(),
                       [&](const IterateRecord& r) { return r.grad_norm > eps_1; });
}

long count_K2(const Trajectory& traj, double eps_2) {
  return std::count_if(traj.records.begin(), traj.records.end(),
                       [&](const IterateRecord& r) { return lm_of(r) > eps_2; });
}

int max_rejection_run(const Trajectory& traj) {
  int best = 0, cur = 0;
  // The terminal record carries no step.
  for (size_t k = 0; k + 1 < traj.records.size(); ++k) {
    if (traj.records[k].accepted) {
      cur = 0;
    } else {
      best = std::max(best, ++cur);
    }
  }
  return best;
}

Calibration calibrate_zeta_m(const Trajectory& traj, AlgoClass cls,
                             std::optional<int> m) {
  const auto& recs = traj.records;
  const bool any_accepted = std::any_of(
      recs.begin(), recs.end(), [](const IterateRecord& r) { return r.accepted; });
  if (!any_accepted) throw InputError("calibration needs an accepted step");
  Calibration c;
  c.m_hat = m.value_or(1 + max_rejection_run(traj));
  if (c.m_hat < 1) throw InputError("calibration: m must be positive");
  bool any_decrease = false;
  for (size_t k = 0; k + c.m_hat < recs.size(); ++k) {
    const double dec = recs[k].f - recs[k + c.m_hat].f;
    if (!(dec > 0.0)) continue;
    any_decrease = true;
    const double mu = measure(traj, cls, k, c.m_hat);
    if (!(mu > 0.0)) continue;
    c.zeta_hat = std::max(c.zeta_hat, mu / dec);
    ++c.windows;
  }
  if (!any_decrease) throw InputError("calibration: all decreases are zero");
  return c;
}

AlgoClass r1_class(Algo algo) {
  return algo == Algo::RN || algo == Algo::RN_A ? AlgoClass::kNewton
                                                : AlgoClass::kGrad;
}

std::optional<AlgoClass> r2_class(Algo algo) {
  if (algo == Algo::TR_H || algo == Algo::RN || algo == Algo::RN_A) {
    return AlgoClass::kCurvature;
  }
  return std::nullopt;
}

std::optional<double> VerificationReport::zeta_for(AlgoClass cls) const {
  for (const auto& c : calibration) {
    if (c.cls == cls && c.zeta > 0.0) return c.zeta;
  }
  return std::nullopt;
}

double resolution_floor(double f_ref) { return 1e-6 * std::abs(f_ref); }

VerificationReport verify_run(const Trajectory& traj,
                              const RegionParams& region_params,
                              const VerifyOptions& options) {
  if (traj.records.empty()) throw InputError("verify_run: empty trajectory");
  const Algo algo = traj.config.algo;
  VerificationReport rep;
  rep.objective_id = traj.objective_id;
  rep.algo = algo_name(algo);
  rep.trajectory_id = traj.objective_id + "/" + rep.algo;
  rep.f_ref = region_params.f_ref;
  const double floor = resolution_floor(rep.f_ref);

  // Work on a relabelled copy: gaps recomputed from f, labels from witnesses.
  Trajectory t = traj;
  for (auto& r : t.records) r.delta_f = r.f - rep.f_ref;

  if (options.kappa) {
    rep.kappa = *options.kappa;
    rep.kappa_source = "explicit";
  } else if (options.kappa_source == KappaSource::kRecommended) {
    rep.kappa = region_params.kappa;
    rep.kappa_source = "recommended";
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : t.records) {
      if (!(r.delta_f > floor) || !std::isfinite(r.delta_f)) continue;
      double mu = r.grad_norm * r.grad_norm;
      if (is_second_order(algo)) mu = std::max(mu, std::pow(lm_of(r), 3));
      best = std::min(best, mu / r.delta_f);
    }
    if (std::isfinite(best) && best > 0.0) {
      rep.kappa = best;
      rep.kappa_source = "trajectory";
    } else {
      rep.kappa = region_params.kappa;
      rep.kappa_source = "recommended (trajectory estimate degenerate)";
    }
  }
  if (!(rep.kappa > 0.0)) throw InputError("verify_run: kappa must be positive");
  const RegionParams vp{rep.kappa, rep.f_ref};
  for (auto& r : t.records) {
    r.region = classify_witness({r.delta_f, r.grad_norm, r.lambda_minus}, vp);
  }

  // Constants for each decrease class.
  std::vector<AlgoClass> classes{r1_class(algo)};
  if (auto c2 = r2_class(algo)) classes.push_back(*c2);
  const bool analytic = algo == Algo::RG && !options.zeta && !options.m;
  bool calibrated = true;
  if (analytic) {
    rep.m_hat = 1;
    rep.calibration.push_back({AlgoClass::kGrad, 2.0 * traj.config.l1,
                               "analytic", 0});
  } else {
    rep.m_hat = options.m.value_or(1 + max_rejection_run(t));
    for (AlgoClass c : classes) {
      ClassCalibration cc{c, 0.0, "empirical", 0};
      if (options.zeta) {
        cc.zeta = *options.zeta;
        cc.source = "override";
      } else {
        try {
          const Calibration cal = calibrate_zeta_m(t, c, rep.m_hat);
          cc.zeta = cal.zeta_hat;
          cc.windows = cal.windows;
        } catch (const InputError& e) {
          calibrated = false;
          rep.coverage_note = std::string("calibration failed: ") + e.what();
        }
      }
      rep.calibration.push_back(cc);
    }
  }
  const int m = rep.m_hat;
  const double f0_gap = t.records.front().delta_f;

  const auto& recs = t.records;
  for (size_t k = 0; k + m < recs.size(); ++k) {
    Check ch;
    ch.k = static_cast<int>(k);
    ch.region = recs[k].region.region;
    ch.region_next = recs[k + m].region.region;
    const double dfk = recs[k].delta_f;
    const double dfm = recs[k + m].delta_f;
    ch.observed = dfk > 0.0 ? dfm / dfk : 0.0;
    if (!calibrated) {
      ch.note = "no calibrated constants";
    } else if (!(dfk > floor)) {
      ch.note = dfk > 0.0 ? "gap below numerical resolution"
                          : "nonpositive gap";
    } else {
      for (AlgoClass c : classes) {
        const auto z = rep.zeta_for(c);
        if (!z) continue;
        RateContext ctx{c, 2, rep.kappa, *z, m, f0_gap};
        const Region lab =
            c == AlgoClass::kNewton ? recs[k + m].region.region : recs[k].region.region;
        const RateBound b = rate_template(lab, ctx, dfk);
        if (!b.applicable) continue;
        if (!ch.applicable || b.ratio_bound < ch.predicted.ratio_bound) {
          ch.predicted = b;
          ch.cls = c;
          ch.applicable = true;
        }
      }
      if (!ch.applicable) ch.note = "no template for this region and method";
    }
    if (ch.applicable) {
      ++rep.applicable_checks;
      ch.satisfied = ch.observed <= ch.predicted.ratio_bound + kRatioTolerance;
      if (!ch.satisfied) {
        rep.violations.push_back(
            {ch.k, "rate",
             "observed ratio " + std::to_string(ch.observed) +
                 " exceeds bound " + std::to_string(ch.predicted.ratio_bound) +
                 " (" + class_name(*ch.cls) + ", " + region_name(
                     *ch.cls == AlgoClass::kNewton ? ch.region_next : ch.region) +
                 ")"});
      }
    }
    rep.checks.push_back(ch);
  }

  for (size_t k = 0; k + 1 < recs.size(); ++k) {
    const double tol = 1e-12 * std::max(1.0, std::abs(recs[k].f));
    if (recs[k + 1].f > recs[k].f + tol) {
      rep.violations.push_back({static_cast<int>(k + 1), "monotonicity",
                                "f increased from " + std::to_string(recs[k].f) +
                                    " to " + std::to_string(recs[k + 1].f)});
    }
    if (!recs[k].accepted && recs[k + 1].x != recs[k].x) {
      rep.violations.push_back({static_cast<int>(k), "rejected_step_moved",
                                "x changed after a rejected step"});
    }
  }
  if (rep.applicable_checks == 0 && rep.coverage_note.empty()) {
    rep.coverage_note = "no applicable checks: zero coverage";
  }

  // Function class implied by the labels met along the run.
  std::set<Region> labels;
  for (const auto& r : recs) {
    if (r.delta_f > floor) labels.insert(r.region.region);
  }
  rep.function_class = infer_class(labels);
  if (rep.function_class) rep.scenario = infer_scenario(labels);

  double zeta_max = 0.0;
  for (const auto& c : rep.calibration) zeta_max = std::max(zeta_max, c.zeta);
  auto predict = [&](double eps) -> std::pair<std::optional<double>, std::string> {
    if (!rep.function_class) return {std::nullopt, "labels match no function class"};
    if (!(zeta_max > 0.0)) return {std::nullopt, "no calibrated zeta"};
    try {
      ComplexityInputs in{rep.kappa, zeta_max, m, f0_gap, eps, *rep.scenario};
      return {complexity_bound(*rep.function_class, algo, in).iterations, ""};
    } catch (const InputError& e) {
      return {std::nullopt, e.what()};
    }
  };

  if (traj.f_inf) {
    std::vector<double> eps_list = options.eps_f_list;
    if (traj.config.termination.eps_f) {
      eps_list.push_back(*traj.config.termination.eps_f);
    }
    std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
    eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());
    for (double eps : eps_list) {
      KfCount kc;
      kc.eps_f = eps;
      kc.observed = count_Kf(t, eps, *traj.f_inf);
      auto [pred, note] = predict(eps);
      kc.predicted = pred;
      kc.note = note;
      if (pred) kc.within_bound = kc.observed <= *pred;
      rep.kf_counts.push_back(kc);
    }
  }

  const auto eps_1 = options.eps_1 ? options.eps_1 : traj.config.termination.eps_1;
  if (eps_1) {
    ContemporaryComparison cc;
    cc.eps_1 = *eps_1;
    cc.K1_observed = count_K1(t, *eps_1);
    const double gap0 = traj.f_inf ? recs.front().f - *traj.f_inf : f0_gap;
    cc.constant = algo == Algo::RG ? 2.0 * traj.config.l1 : 1.0;
    const auto eps_2 = options.eps_2 ? options.eps_2 : traj.config.termination.eps_2;
    const ContemporaryBound cb =
        contemporary_bound(algo, *eps_1, eps_2.value_or(*eps_1), gap0, cc.constant);
    cc.K1_bound = cb.K1;
    if (eps_2) {
      cc.eps_2 = *eps_2;
      cc.K2_observed = count_K2(t, *eps_2);
      cc.K2_bound = cb.K2;
    }
    if (algo == Algo::RG) {
      // ||g||^2 <= 2 l1 (f - f_inf) when l1 exceeds the Lipschitz constant, so
      // a gap below eps_1^2 / (2 l1) forces ||g|| <= eps_1.
      auto [pred, note] = predict(*eps_1 * *eps_1 / (2.0 * traj.config.l1));
      cc.rc_bound = pred;
      cc.note = note;
      if (pred) cc.rc_smaller = *pred < cc.K1_bound;
    } else {
      cc.note = "region bound on K1 only derived for rg";
    }
    rep.contemporary = cc;
  }
  return rep;
}

std::vector<EnvelopePoint> envelope_compare(const Trajectory& traj,
                                            const VerificationReport& report) {
  if (!traj.f_inf) throw InputError("envelope_compare: f_inf must be known");
  if (traj.records.empty()) throw InputError("envelope_compare: empty trajectory");
  const int m = report.m_hat;
  std::vector<EnvelopePoint> out;
  double env = traj.records.front().f - report.f_ref;
  for (size_t k = 0; k < traj.records.size(); k += m) {
    out.push_back({static_cast<int>(k), traj.records[k].f - report.f_ref, env});
    double r = 1.0;
    if (k < report.checks.size() && report.checks[k].applicable) {
      r = report.checks[k].predicted.ratio_bound;
    }
    env *= r;
  }
  return out;
}

}  // namespace regional
