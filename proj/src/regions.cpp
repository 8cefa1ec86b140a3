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

#include "regional/regions.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "regional/subproblems.hpp"

namespace regional {

std::string region_name(Region r) {
  switch (r) {
    case Region::R1_1: return "R1_1";
    case Region::R1_2: return "R1_2";
    case Region::R2_1: return "R2_1";
    case Region::R2_2: return "R2_2";
    case Region::R2_3: return "R2_3";
    case Region::Outside: return "Outside";
    case Region::BelowRef: return "BelowRef";
    case Region::Unknown: return "Unknown";
  }
  return "Unknown";
}

Region region_from_name(const std::string& name) {
  for (Region r : {Region::R1_1, Region::R1_2, Region::R2_1, Region::R2_2,
                   Region::R2_3, Region::Outside, Region::BelowRef,
                   Region::Unknown}) {
    if (region_name(r) == name) return r;
  }
  throw InputError("unknown region label: " + name);
}

RegionLabel classify_witness(const Witness& w, const RegionParams& params) {
  RegionLabel out{Region::Outside, w};
  if (w.delta_f < 0.0) {
    out.region = Region::BelowRef;
    return out;
  }
  const double c = params.kappa * w.delta_f;
  const double gn = w.grad_norm;
  // sup over tau in [1, 2] of t^tau is max(t, t^2)
  if (std::max(gn, gn * gn) >= c) {
    out.region = gn * gn >= c ? Region::R1_2 : Region::R1_1;
    return out;
  }
  if (!w.lambda_minus) {
    out.region = Region::Unknown;
    return out;
  }
  const double lm = *w.lambda_minus;
  if (std::max(lm, lm * lm * lm) >= c) {
    if (lm * lm * lm >= c) {
      out.region = Region::R2_3;
    } else if (lm * lm >= c) {
      out.region = Region::R2_2;
    } else {
      out.region = Region::R2_1;
    }
  }
  return out;
}

RegionLabel classify(const Objective& obj, const Vec& x,
                     const RegionParams& params, bool first_order_only) {
  if (!(params.kappa > 0.0)) throw InputError("kappa must be positive");
  const bool want_h = obj.hessian_available() && !first_order_only;
  const Evaluation e = obj.evaluate(x, want_h ? 2 : 1);
  Witness w{e.f - params.f_ref, e.g->norm(), std::nullopt};
  if (want_h) w.lambda_minus = std::max(0.0, -leftmost_eig(*e.H).lambda);
  RegionLabel out = classify_witness(w, params);
  if (out.region == Region::Unknown && !first_order_only) {
    throw InputError("objective " + obj.id() +
                     " has no Hessian; use first-order-only classification");
  }
  return out;
}

double delta_p_values(const Vec& g, const std::optional<Mat>& H, int p) {
  if (p == 1) return g.squaredNorm();
  if (p == 2) {
    if (!H) throw InputError("delta_p: Hessian required for p = 2");
    const double lm = std::max(0.0, -leftmost_eig(*H).lambda);
    return lm * lm * lm;
  }
  throw InputError("delta_p: unsupported order " + std::to_string(p) +
                   " (only p = 1, 2)");
}

double delta_p(const Objective& obj, const Vec& x, int p) {
  if (p != 1 && p != 2) {
    throw InputError("delta_p: unsupported order " + std::to_string(p) +
                     " (only p = 1, 2)");
  }
  const Evaluation e = obj.evaluate(x, p);
  return delta_p_values(*e.g, e.H, p);
}

PLabel classify_p_values(const std::vector<double>& deltas, double delta_f,
                         int p, double kappa) {
  if (p < 1 || static_cast<int>(deltas.size()) < p) {
    throw InputError("classify_p: measures missing for order p");
  }
  PLabel out;
  out.p = p;
  if (delta_f < 0.0) {
    out.status = PLabel::Status::kBelowRef;
    return out;
  }
  const double c = kappa * delta_f;
  for (int j = 1; j < p; ++j) {
    const double d = deltas[j - 1];
    if (std::max(d, std::pow(d, j + 1)) >= c) {
      out.status = PLabel::Status::kLowerRegion;
      return out;
    }
  }
  const double d = deltas[p - 1];
  if (std::max(d, std::pow(d, p + 1)) < c) {
    out.status = PLabel::Status::kOutside;
    return out;
  }
  out.status = PLabel::Status::kMember;
  out.q = 1;
  for (int q = p + 1; q >= 1; --q) {
    if (std::pow(d, q) >= c) {
      out.q = q;
      break;
    }
  }
  return out;
}

PLabel classify_p(const Objective& obj, const Vec& x, int p,
                  const RegionParams& params) {
  if (p != 1 && p != 2) {
    throw InputError("classify_p: unsupported order " + std::to_string(p));
  }
  if (!(params.kappa > 0.0)) throw InputError("kappa must be positive");
  const Evaluation e = obj.evaluate(x, p);
  std::vector<double> deltas;
  for (int j = 1; j <= p; ++j) deltas.push_back(delta_p_values(*e.g, e.H, j));
  return classify_p_values(deltas, e.f - params.f_ref, p, params.kappa);
}

RegionScan region_scan(const Objective& obj, int resolution,
                       const RegionParams& params) {
  if (resolution < 2) throw InputError("scan resolution must be at least 2");
  RegionScan out;
  out.resolution = resolution;
  out.points = uniform_grid(obj.scan_domain(), resolution);
  out.labels.resize(out.points.size());
  const size_t total = out.points.size();
  const size_t workers =
      total < 4096 ? 1
                   : std::max<size_t>(1, std::thread::hardware_concurrency());
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](size_t w) {
    try {
      for (size_t c = w; c < total; c += workers) {
        out.labels[c] = classify(obj, out.points[c], params);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace regional
