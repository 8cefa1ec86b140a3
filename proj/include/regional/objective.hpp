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

#ifndef REGIONAL_OBJECTIVE_HPP_
#define REGIONAL_OBJECTIVE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace regional {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Raised for bad caller input (dimension mismatch, invalid parameters, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a numerical routine fails to produce an answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Box {
  Vec lo;
  Vec hi;

  bool contains(const Vec& x, double margin = 0.0) const;
};

struct KnownConstants {
  std::optional<double> L1;  // gradient Lipschitz constant
  std::optional<double> L2;  // Hessian Lipschitz constant
  std::optional<double> M1;
  std::optional<double> M2;
};

struct Evaluation {
  double f = 0.0;
  std::optional<Vec> g;
  std::optional<Mat> H;
  // Set when H is a one-sided limit taken at a jump of the second derivative.
  bool hessian_nonsmooth = false;
};

// Raw oracle: returns f, and g/H when order >= 1/2.
using EvalFn = std::function<Evaluation(const Vec& x, int order)>;

class Objective {
 public:
  Objective(std::string id, int n, EvalFn eval, Box scan_domain,
            int smoothness_order, bool hessian_available,
            std::optional<double> f_inf, KnownConstants constants);

  const std::string& id() const { return id_; }
  int n() const { return n_; }
  const Box& scan_domain() const { return scan_domain_; }
  int smoothness_order() const { return smoothness_order_; }
  bool hessian_available() const { return hessian_available_; }
  const std::optional<double>& f_inf() const { return f_inf_; }
  const KnownConstants& constants() const { return constants_; }

  // Checks dimension and order, then validates the oracle output (symmetry of
  // H, f >= f_inf). Pure: identical inputs give identical outputs.
  Evaluation evaluate(const Vec& x, int order) const;

 private:
  std::string id_;
  int n_;
  EvalFn eval_;
  Box scan_domain_;
  int smoothness_order_;
  bool hessian_available_;
  std::optional<double> f_inf_;
  KnownConstants constants_;
};

struct FdResiduals {
  double grad_residual = 0.0;
  double hess_residual = 0.0;  // 0 when the objective has no Hessian
};

// Max-norm discrepancy between analytic derivatives and central differences.
FdResiduals fd_check(const Objective& obj, const Vec& x, double h);

// min over grid of ||g||^tau / (f - f_ref); points with f <= f_ref are skipped.
double estimate_kappa(const Objective& obj, double f_ref, double tau,
                      const std::vector<Vec>& grid);

// Tensor grid with res points per axis, first coordinate varying fastest.
std::vector<Vec> uniform_grid(const Box& box, int res);

}  // namespace regional

#endif  // REGIONAL_OBJECTIVE_HPP_
