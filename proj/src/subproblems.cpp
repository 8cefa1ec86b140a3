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

#include "regional/subproblems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regional {
namespace {

constexpr double kHardCaseTol = 1e-12;
constexpr int kNewtonIters = 100;
constexpr int kBisectIters = 300;

struct SecularEval {
  double h = 0.0;
  double dh = 0.0;
  bool done = false;
};

// Root of an increasing concave function on (a, b] with h(b) >= 0. Newton
// steps that leave the bracket are replaced by bisection; after kNewtonIters
// the search falls back to plain bisection.
template <class Fn>
double secular_root(Fn fn, double a, double b, const char* what) {
  double x = b;
  for (int it = 0; it < kNewtonIters; ++it) {
    const SecularEval e = fn(x);
    if (e.done) return x;
    if (e.h < 0.0) a = x; else b = x;
    double next = x - e.h / e.dh;
    if (!std::isfinite(next) || next <= a || next >= b) next = 0.5 * (a + b);
    if (next == x) return x;
    x = next;
  }
  for (int it = 0; it < kBisectIters; ++it) {
    x = 0.5 * (a + b);
    const SecularEval e = fn(x);
    if (e.done) return x;
    if (e.h < 0.0) a = x; else b = x;
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(b))) {
      return b;
    }
  }
  throw NumericalError(std::string(what) + ": secular equation did not converge");
}

double matrix_scale(const Vec& values) {
  return values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
}

// Components of the leftmost eigenspace, within a relative tolerance.
int leftmost_block(const Vec& lambda) {
  const double tol = kHardCaseTol * (1.0 + matrix_scale(lambda));
  int k = 1;
  while (k < lambda.size() && lambda(k) - lambda(0) <= tol) ++k;
  return k;
}

void check_inputs(const Vec& g, const Mat& H, const char* what) {
  if (H.rows() != H.cols() || g.size() != H.rows()) {
    throw InputError(std::string(what) + ": dimension mismatch");
  }
}

// Step -(Lambda + mu)^{-1} gamma restricted to components >= from.
Vec shifted_step(const Vec& gamma, const Vec& lambda, double mu, int from) {
  Vec y = Vec::Zero(gamma.size());
  for (Eigen::Index i = from; i < gamma.size(); ++i) {
    y(i) = -gamma(i) / (lambda(i) + mu);
  }
  return y;
}

struct PhiEval {
  double phi;
  double dpsi;  // derivative of 1/phi
};

PhiEval phi_at(const Vec& gamma, const Vec& lambda, double mu) {
  double s2 = 0.0, s3 = 0.0;
  for (Eigen::Index i = 0; i < gamma.size(); ++i) {
    const double d = lambda(i) + mu;
    const double t = gamma(i) * gamma(i);
    s2 += t / (d * d);
    s3 += t / (d * d * d);
  }
  const double phi = std::sqrt(s2);
  return {phi, s3 / (phi * phi * phi)};
}

}  // namespace

SymEig eigendecompose(const Mat& H, int dense_limit) {
  if (H.rows() != H.cols()) throw InputError("eigendecompose: matrix not square");
  if (H.rows() == 0) throw InputError("eigendecompose: empty matrix");
  if (H.rows() > dense_limit) {
    throw InputError("eigendecompose: dimension exceeds dense limit");
  }
  const double scale = H.cwiseAbs().maxCoeff();
  if ((H - H.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + scale)) {
    throw InputError("eigendecompose: matrix is not symmetric");
  }
  const Mat Hs = 0.5 * (H + H.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(Hs);
  if (es.info() != Eigen::Success) {
    throw NumericalError("eigendecompose: eigensolver did not converge");
  }
  SymEig out{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    auto col = out.vectors.col(j);
    const double cut = 1e-12 * col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) > cut) {
        if (col(i) < 0.0) col = -col;
        break;
      }
    }
  }
  return out;
}

EigPair leftmost_eig(const Mat& H, int dense_limit) {
  SymEig e = eigendecompose(H, dense_limit);
  return {e.values(0), e.vectors.col(0)};
}

TrSolution solve_tr(const Vec& g, const Mat& H, double delta) {
  check_inputs(g, H, "solve_tr");
  if (!(delta > 0.0)) throw InputError("solve_tr: delta must be positive");
  const SymEig eig = eigendecompose(H);
  const Vec& lambda = eig.values;
  const Mat& Q = eig.vectors;
  const Vec gamma = Q.transpose() * g;
  const double gnorm = g.norm();
  const double l1 = lambda(0);
  const int nl = leftmost_block(lambda);

  double mu = 0.0;
  Vec y;
  bool hard = false;
  bool solved = false;

  if (l1 > 0.0) {
    y = shifted_step(gamma, lambda, 0.0, 0);
    solved = y.norm() <= delta;
  }
  const double mu_low = std::max(0.0, -l1);
  const double tol_l = kHardCaseTol * (1.0 + matrix_scale(lambda));
  if (!solved && l1 <= tol_l &&
      gamma.head(nl).norm() <= kHardCaseTol * gnorm) {
    Vec p = shifted_step(gamma, lambda, mu_low, nl);
    const double pn = p.norm();
    if (pn <= delta) {
      mu = mu_low;
      y = p;
      if (l1 < 0.0) {
        hard = true;
        y(0) += std::sqrt(std::max(0.0, delta * delta - pn * pn));
      }
      solved = true;
    }
  }
  if (!solved) {
    const double mu_hi = std::max(gnorm / delta - l1, mu_low);
    auto fn = [&](double m) {
      const PhiEval pe = phi_at(gamma, lambda, m);
      SecularEval e;
      e.h = 1.0 / pe.phi - 1.0 / delta;
      e.dh = pe.dpsi;
      e.done = std::abs(pe.phi - delta) <= 1e-13 * delta;
      return e;
    };
    mu = secular_root(fn, mu_low, mu_hi, "solve_tr");
    y = shifted_step(gamma, lambda, mu, 0);
  }

  TrSolution out;
  out.s = Q * y;
  out.multiplier = mu;
  out.hard_case = hard;
  const double sn = out.s.norm();
  out.kkt_residual = (H * out.s + mu * out.s + g).norm() +
                     mu * std::abs(delta - sn);
  out.model_decrease = -(g.dot(out.s) + 0.5 * out.s.dot(H * out.s));
  return out;
}

CubicSolution solve_cubic(const Vec& g, const Mat& H, double sigma) {
  check_inputs(g, H, "solve_cubic");
  if (!(sigma > 0.0)) throw InputError("solve_cubic: sigma must be positive");
  const SymEig eig = eigendecompose(H);
  const Vec& lambda = eig.values;
  const Mat& Q = eig.vectors;
  const Vec gamma = Q.transpose() * g;
  const double gnorm = g.norm();
  const double l1 = lambda(0);
  const int nl = leftmost_block(lambda);
  const double mu_low = std::max(0.0, -l1);

  Vec y;
  bool hard = false;
  bool solved = false;
  if (gnorm == 0.0 && l1 >= 0.0) {
    y = Vec::Zero(g.size());
    solved = true;
  } else if (l1 < 0.0 && gamma.head(nl).norm() <= kHardCaseTol * gnorm) {
    Vec p = shifted_step(gamma, lambda, mu_low, nl);
    const double pn = p.norm();
    const double r = mu_low / sigma;
    if (pn <= r) {
      y = p;
      y(0) += std::sqrt(std::max(0.0, r * r - pn * pn));
      hard = true;
      solved = true;
    }
  }
  if (!solved) {
    const double mu_hi = 0.5 * (-l1 + std::sqrt(l1 * l1 + 4.0 * sigma * gnorm));
    auto fn = [&](double m) {
      const PhiEval pe = phi_at(gamma, lambda, m);
      SecularEval e;
      e.h = 1.0 / pe.phi - sigma / m;
      e.dh = pe.dpsi + sigma / (m * m);
      e.done = std::abs(pe.phi - m / sigma) <= 1e-13 * (m / sigma);
      return e;
    };
    const double mu = secular_root(fn, mu_low, std::max(mu_hi, mu_low), "solve_cubic");
    y = shifted_step(gamma, lambda, mu, 0);
  }

  CubicSolution out;
  out.s = Q * y;
  out.hard_case = hard;
  const double r = out.s.norm();
  out.shift = sigma * r;
  out.kkt_residual = (H * out.s + out.shift * out.s + g).norm();
  out.model_decrease = -(g.dot(out.s) + 0.5 * out.s.dot(H * out.s) +
                         sigma / 3.0 * r * r * r);
  return out;
}

}  // namespace regional
