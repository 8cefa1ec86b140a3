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

#include "regional/objective.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace regional {

bool Box::contains(const Vec& x, double margin) const {
  if (x.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) < lo(i) + margin || x(i) > hi(i) - margin) return false;
  }
  return true;
}

Objective::Objective(std::string id, int n, EvalFn eval, Box scan_domain,
                     int smoothness_order, bool hessian_available,
                     std::optional<double> f_inf, KnownConstants constants)
    : id_(std::move(id)),
      n_(n),
      eval_(std::move(eval)),
      scan_domain_(std::move(scan_domain)),
      smoothness_order_(smoothness_order),
      hessian_available_(hessian_available),
      f_inf_(f_inf),
      constants_(constants) {
  if (n_ <= 0) throw InputError("objective dimension must be positive");
  if (smoothness_order_ != 1 && smoothness_order_ != 2) {
    throw InputError("smoothness_order must be 1 or 2");
  }
  if (scan_domain_.lo.size() != n_ || scan_domain_.hi.size() != n_) {
    throw InputError("scan domain dimension mismatch for " + id_);
  }
}

Evaluation Objective::evaluate(const Vec& x, int order) const {
  if (x.size() != n_) {
    throw InputError("dimension mismatch: objective " + id_ + " has n = " +
                     std::to_string(n_) + ", point has " +
                     std::to_string(x.size()));
  }
  if (order < 0 || order > 2) throw InputError("order must be 0, 1 or 2");
  if (order == 2 && !hessian_available_) {
    throw InputError("objective " + id_ + " provides no Hessian");
  }
  Evaluation e = eval_(x, order);
  if (order >= 1 && (!e.g || e.g->size() != n_)) {
    throw NumericalError("objective " + id_ + " returned no gradient");
  }
  if (order == 2) {
    if (!e.H || e.H->rows() != n_ || e.H->cols() != n_) {
      throw NumericalError("objective " + id_ + " returned no Hessian");
    }
    const Mat& H = *e.H;
    const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * (1.0 + H.cwiseAbs().maxCoeff())) {
      throw NumericalError("objective " + id_ + " returned asymmetric Hessian");
    }
  }
  return e;
}

FdResiduals fd_check(const Objective& obj, const Vec& x, double h) {
  if (!(h > 0.0)) throw InputError("fd_check: h must be positive");
  const int n = obj.n();
  const int order = obj.hessian_available() ? 2 : 1;
  const Evaluation e = obj.evaluate(x, order);
  FdResiduals r;
  Vec xp = x, xm = x;
  for (int i = 0; i < n; ++i) {
    xp(i) = x(i) + h;
    xm(i) = x(i) - h;
    const double fd = (obj.evaluate(xp, 0).f - obj.evaluate(xm, 0).f) / (2 * h);
    r.grad_residual = std::max(r.grad_residual, std::abs(fd - (*e.g)(i)));
    if (order == 2) {
      const Vec dg = (*obj.evaluate(xp, 1).g - *obj.evaluate(xm, 1).g) / (2 * h);
      r.hess_residual = std::max(
          r.hess_residual, (dg - e.H->col(i)).cwiseAbs().maxCoeff());
    }
    xp(i) = x(i);
    xm(i) = x(i);
  }
  return r;
}

double estimate_kappa(const Objective& obj, double f_ref, double tau,
                      const std::vector<Vec>& grid) {
  if (grid.empty()) throw InputError("estimate_kappa: empty grid");
  double best = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const Vec& x : grid) {
    const Evaluation e = obj.evaluate(x, 1);
    const double gap = e.f - f_ref;
    if (!(gap > 0.0)) continue;
    any = true;
    best = std::min(best, std::pow(e.g->norm(), tau) / gap);
  }
  if (!any) {
    throw InputError("estimate_kappa: no grid point has f > f_ref");
  }
  return best;
}

std::vector<Vec> uniform_grid(const Box& box, int res) {
  if (res < 2) throw InputError("grid resolution must be at least 2");
  const Eigen::Index n = box.lo.size();
  size_t total = 1;
  for (Eigen::Index d = 0; d < n; ++d) {
    total *= static_cast<size_t>(res);
    if (total > 50'000'000) throw InputError("grid too large");
  }
  std::vector<Vec> pts;
  pts.reserve(total);
  std::vector<int> idx(n, 0);
  for (size_t c = 0; c < total; ++c) {
    Vec x(n);
    for (Eigen::Index d = 0; d < n; ++d) {
      x(d) = box.lo(d) + (box.hi(d) - box.lo(d)) * idx[d] / (res - 1);
    }
    pts.push_back(std::move(x));
    for (Eigen::Index d = 0; d < n; ++d) {
      if (++idx[d] < res) break;
      idx[d] = 0;
    }
  }
  return pts;
}

}  // namespace regional
