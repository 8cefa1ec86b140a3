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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace regional::oracle {

int count_below(const Mat& A, double t) {
  const int n = static_cast<int>(A.rows());
  const double tiny = 1e-300 + 1e-15 * (1.0 + A.cwiseAbs().maxCoeff());
  Mat L = Mat::Identity(n, n);
  Vec d(n);
  int negatives = 0;
  for (int j = 0; j < n; ++j) {
    double dj = A(j, j) - t;
    for (int k = 0; k < j; ++k) dj -= L(j, k) * L(j, k) * d(k);
    if (std::abs(dj) < tiny) dj = -tiny;
    d(j) = dj;
    if (dj < 0.0) ++negatives;
    for (int i = j + 1; i < n; ++i) {
      double v = A(i, j);
      for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k) * d(k);
      L(i, j) = v / dj;
    }
  }
  return negatives;
}

double smallest_eig(const Mat& A) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < A.rows(); ++i) {
    const double r = A.row(i).cwiseAbs().sum() - std::abs(A(i, i));
    lo = std::min(lo, A(i, i) - r);
    hi = std::max(hi, A(i, i) + r);
  }
  hi += 1.0;
  lo -= 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (count_below(A, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Mat random_symmetric(int n, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Mat A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = u(rng);
  }
  return A;
}

Vec random_vec(int n, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

Mat random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Mat G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G(i, j) = N(rng);
  }
  Eigen::HouseholderQR<Mat> qr(G);
  return qr.householderQ() * Mat::Identity(n, n);
}

double tr_model(const Vec& g, const Mat& H, const Vec& s) {
  return g.dot(s) + 0.5 * s.dot(H * s);
}

double cubic_model(const Vec& g, const Mat& H, double sigma, const Vec& s) {
  return tr_model(g, H, s) + sigma / 3.0 * std::pow(s.norm(), 3);
}

double tr_value(const Vec& g, const Mat& H, double delta) {
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  const Vec lam = es.eigenvalues();
  const Vec gam = es.eigenvectors().transpose() * g;
  auto dual = [&](double mu) {
    double v = -0.5 * mu * delta * delta;
    for (int i = 0; i < lam.size(); ++i) {
      const double den = lam(i) + mu;
      if (gam(i) == 0.0) continue;
      if (den <= 0.0) return -std::numeric_limits<double>::infinity();
      v -= 0.5 * gam(i) * gam(i) / den;
    }
    return v;
  };
  const double mu0 = std::max(0.0, -lam(0));
  const double mu_hi = mu0 + g.norm() / delta + lam.cwiseAbs().maxCoeff() + 1.0;
  // Grid over offsets from mu0, geometric near mu0, then golden refinement of
  // the best bracket. The dual is concave, so the bracket holds the maximum.
  std::vector<double> grid{mu0};
  for (int i = -16; i <= 0; ++i) {
    for (int j = 1; j < 10; ++j) {
      const double off = j * std::pow(10.0, i) * (mu_hi - mu0);
      if (off <= mu_hi - mu0) grid.push_back(mu0 + off);
    }
  }
  grid.push_back(mu_hi);
  std::sort(grid.begin(), grid.end());
  size_t best = 0;
  for (size_t i = 1; i < grid.size(); ++i) {
    if (dual(grid[i]) > dual(grid[best])) best = i;
  }
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[std::min(best + 1, grid.size() - 1)];
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 300; ++it) {
    const double c = b - r * (b - a);
    const double d = a + r * (b - a);
    if (dual(c) >= dual(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  double v = std::max(dual(grid[best]), dual(0.5 * (a + b)));
  // Limit at mu0 when the leftmost components vanish.
  if (mu0 > 0.0) v = std::max(v, dual(mu0 * (1.0 + 1e-15) + 1e-300));
  return v;
}

Vec local_min(const SmoothFn& fn, Vec x, int max_iters) {
  FGH cur = fn(x);
  for (int it = 0; it < max_iters; ++it) {
    const double gn = cur.g.norm();
    if (!(gn > 1e-14 * (1.0 + std::abs(cur.f)))) break;
    Vec d;
    Eigen::LLT<Mat> llt(cur.H);
    if (llt.info() == Eigen::Success) {
      d = -llt.solve(cur.g);
    } else {
      d = -cur.g;
    }
    if (d.dot(cur.g) >= 0.0) d = -cur.g;
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 80; ++ls) {
      const Vec xt = x + t * d;
      const FGH trial = fn(xt);
      if (trial.f <= cur.f + 1e-4 * t * d.dot(cur.g)) {
        moved = xt != x;
        x = xt;
        cur = trial;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  return x;
}

double multistart_min(const SmoothFn& fn, int n, double radius, int starts,
                      std::mt19937_64& rng, const std::vector<Vec>& extra) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<Vec> all = extra;
  for (int i = 0; i < starts; ++i) all.push_back(random_vec(n, radius, rng));
  for (const Vec& x0 : all) {
    const Vec x = local_min(fn, x0);
    best = std::min(best, fn(x).f);
  }
  return best;
}

double cubic_value(const Vec& g, const Mat& H, double sigma, int starts,
                   std::mt19937_64& rng) {
  const int n = static_cast<int>(g.size());
  auto fn = [&](const Vec& s) {
    const double r = s.norm();
    FGH o;
    o.f = cubic_model(g, H, sigma, s);
    o.g = g + H * s + sigma * r * s;
    o.H = H + sigma * r * Mat::Identity(n, n);
    if (r > 0.0) o.H += sigma / r * s * s.transpose();
    return o;
  };
  const double scale =
      (H.cwiseAbs().maxCoeff() * n + std::sqrt(sigma * g.norm())) / sigma + 1.0;
  std::vector<Vec> extra{Vec::Zero(n)};
  for (int i = 0; i < n; ++i) {
    extra.push_back(scale * Vec::Unit(n, i));
    extra.push_back(-scale * Vec::Unit(n, i));
  }
  return multistart_min(fn, n, scale, starts, rng, extra);
}

double vp_min(const Vec& g, const Mat& H, int p, int starts,
              std::mt19937_64& rng) {
  const int n = static_cast<int>(g.size());
  if (p == 1) {
    auto fn = [&](const Vec& s) {
      return FGH{g.dot(s) + 0.5 * s.squaredNorm(), g + s, Mat::Identity(n, n)};
    };
    return multistart_min(fn, n, 2.0 * g.norm() + 1.0, starts, rng);
  }
  return cubic_value(Vec::Zero(n), H, 1.0, starts, rng);
}

Region tau_grid_classify(double delta_f, double grad_norm, double lambda_minus,
                         double kappa, double step) {
  if (delta_f < 0.0) return Region::BelowRef;
  const double c = kappa * delta_f;
  auto exists = [&](double a, double hi) {
    const int steps = static_cast<int>(std::lround((hi - 1.0) / step));
    for (int i = 0; i <= steps; ++i) {
      if (std::pow(a, 1.0 + i * step) >= c) return true;
    }
    return false;
  };
  if (exists(grad_norm, 2.0)) {
    return std::pow(grad_norm, 2.0) >= c ? Region::R1_2 : Region::R1_1;
  }
  if (exists(lambda_minus, 3.0)) {
    if (std::pow(lambda_minus, 3.0) >= c) return Region::R2_3;
    if (std::pow(lambda_minus, 2.0) >= c) return Region::R2_2;
    return Region::R2_1;
  }
  return Region::Outside;
}

}  // namespace regional::oracle
