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

#include "regional/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace regional {
namespace {

Box box1(double lo, double hi) {
  Box b{Vec(1), Vec(1)};
  b.lo << lo;
  b.hi << hi;
  return b;
}

Box box2(double lo0, double hi0, double lo1, double hi1) {
  Box b{Vec(2), Vec(2)};
  b.lo << lo0, lo1;
  b.hi << hi0, hi1;
  return b;
}

Mat mat1(double a) { return Mat::Constant(1, 1, a); }

// Grid estimate of L1 = max ||H|| and L2 = max ||H(a) - H(b)|| / ||a - b||
// over neighbouring grid points. Used where no closed form is at hand.
KnownConstants grid_constants(const Objective& obj, int res) {
  const std::vector<Vec> pts = uniform_grid(obj.scan_domain(), res);
  std::vector<Mat> hs;
  hs.reserve(pts.size());
  double l1 = 0.0;
  for (const Vec& x : pts) {
    hs.push_back(*obj.evaluate(x, 2).H);
    Eigen::SelfAdjointEigenSolver<Mat> es(hs.back(), Eigen::EigenvaluesOnly);
    l1 = std::max(l1, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  double l2 = 0.0;
  const int n = obj.n();
  size_t stride = 1;
  for (int d = 0; d < n; ++d) {
    for (size_t c = 0; c < pts.size(); ++c) {
      if ((c / stride) % res == static_cast<size_t>(res - 1)) continue;
      const Mat dh = hs[c + stride] - hs[c];
      Eigen::SelfAdjointEigenSolver<Mat> es(dh, Eigen::EigenvaluesOnly);
      l2 = std::max(l2, es.eigenvalues().cwiseAbs().maxCoeff() /
                            (pts[c + stride] - pts[c]).norm());
    }
    stride *= res;
  }
  KnownConstants k;
  k.L1 = l1;
  k.L2 = l2;
  return k;
}

CorpusEntry make_fig1() {
  EvalFn fn = [](const Vec& x, int order) {
    const double t = x(0);
    Evaluation e;
    if (t <= 1.0) {
      e.f = 1.5 * t * t - 0.5;
      if (order >= 1) e.g = Vec::Constant(1, 3.0 * t);
    } else {
      const double u = t - 2.0;
      e.f = u * u * u + 2.0;
      if (order >= 1) e.g = Vec::Constant(1, 3.0 * u * u);
    }
    if (order >= 2) {
      // Right limit at the jump of f''.
      e.H = mat1(t < 1.0 ? 3.0 : 6.0 * (t - 2.0));
      e.hessian_nonsmooth = (t == 1.0);
    }
    return e;
  };
  KnownConstants k;
  k.L1 = 12.0;  // sup |f''| on [-2, 4], attained at x = 4
  Objective obj("fig1", 1, fn, box1(-2.0, 4.0), 1, true, -0.5, k);
  return {obj, {0.05, -0.5}, {}};
}

CorpusEntry make_saddle2d() {
  EvalFn fn = [](const Vec& x, int order) {
    Evaluation e;
    e.f = x(0) * x(0) - x(1) * x(1) + 10.0;
    if (order >= 1) {
      Vec g(2);
      g << 2.0 * x(0), -2.0 * x(1);
      e.g = g;
    }
    if (order >= 2) {
      Mat H = Mat::Zero(2, 2);
      H(0, 0) = 2.0;
      H(1, 1) = -2.0;
      e.H = H;
    }
    return e;
  };
  KnownConstants k;
  k.L1 = 2.0;
  k.L2 = 0.0;
  Objective obj("saddle2d", 2, fn, box2(-3, 3, -3, 3), 2, true, std::nullopt,
                k);
  return {obj, {0.5, 0.0}, {ClassTag::kSaddle, ClassTag::kUnboundedBelow}};
}

CorpusEntry make_cubic2d() {
  EvalFn fn = [](const Vec& x, int order) {
    Evaluation e;
    const double a = x(0), b = x(1);
    e.f = a * a * a - b * b * b + 22.0;
    if (order >= 1) {
      Vec g(2);
      g << 3.0 * a * a, -3.0 * b * b;
      e.g = g;
    }
    if (order >= 2) {
      Mat H = Mat::Zero(2, 2);
      H(0, 0) = 6.0 * a;
      H(1, 1) = -6.0 * b;
      e.H = H;
    }
    return e;
  };
  KnownConstants k;
  k.L1 = 18.0;  // on the scan box [-3, 3]^2
  k.L2 = 6.0;
  Objective obj("cubic2d", 2, fn, box2(-3, 3, -3, 3), 2, true, std::nullopt,
                k);
  return {obj, {0.5, 0.0}, {ClassTag::kSaddle, ClassTag::kUnboundedBelow}};
}

CorpusEntry make_pl_noncvx() {
  EvalFn fn = [](const Vec& x, int order) {
    const double t = x(0);
    const double s = std::sin(t);
    Evaluation e;
    e.f = t * t + 3.0 * s * s;
    if (order >= 1) e.g = Vec::Constant(1, 2.0 * t + 3.0 * std::sin(2.0 * t));
    if (order >= 2) e.H = mat1(2.0 + 6.0 * std::cos(2.0 * t));
    return e;
  };
  KnownConstants k;
  k.L1 = 8.0;
  k.L2 = 12.0;
  Objective obj("pl_noncvx", 1, fn, box1(-10.0, 10.0), 2, true, 0.0, k);
  // Grid minimum of |g|^2 / f on [-10, 10] is about 0.351.
  return {obj,
          {0.35, 0.0},
          {ClassTag::kPL, ClassTag::kGradientDominated2}};
}

CorpusEntry make_conv_deg1() {
  EvalFn fn = [](const Vec& x, int order) {
    const double r2 = x.squaredNorm();
    Evaluation e;
    e.f = 0.25 * r2 * r2;
    if (order >= 1) e.g = Vec(r2 * x);
    if (order >= 2) {
      e.H = Mat(r2 * Mat::Identity(x.size(), x.size()) +
                2.0 * x * x.transpose());
    }
    return e;
  };
  Objective probe("conv_deg1", 2, fn, box2(-1, 1, -1, 1), 2, true, 0.0, {});
  KnownConstants k = grid_constants(probe, 101);
  Objective obj("conv_deg1", 2, fn, box2(-1, 1, -1, 1), 2, true, 0.0, k);
  return {obj, {1.0, 0.0}, {ClassTag::kGradientDominated1}};
}

CorpusEntry make_rosenbrock() {
  EvalFn fn = [](const Vec& x, int order) {
    const double a = x(0), b = x(1);
    const double w = b - a * a;
    Evaluation e;
    e.f = 100.0 * w * w + (1.0 - a) * (1.0 - a);
    if (order >= 1) {
      Vec g(2);
      g << -400.0 * a * w - 2.0 * (1.0 - a), 200.0 * w;
      e.g = g;
    }
    if (order >= 2) {
      Mat H(2, 2);
      H << 1200.0 * a * a - 400.0 * b + 2.0, -400.0 * a, -400.0 * a, 200.0;
      e.H = H;
    }
    return e;
  };
  Objective probe("rosenbrock", 2, fn, box2(-2, 2, -1, 3), 2, true, 0.0, {});
  KnownConstants k = grid_constants(probe, 101);
  Objective obj("rosenbrock", 2, fn, box2(-2, 2, -1, 3), 2, true, 0.0, k);
  return {obj, {0.01, 0.0}, {}};
}

}  // namespace

std::string tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::kPL: return "PL";
    case ClassTag::kGradientDominated1: return "gradient-dominated-1";
    case ClassTag::kGradientDominated2: return "gradient-dominated-2";
    case ClassTag::kGHDominated23: return "gH-dominated-(2,3)";
    case ClassTag::kSaddle: return "saddle";
    case ClassTag::kUnboundedBelow: return "unbounded-below";
  }
  return "?";
}

std::vector<std::string> corpus_ids() {
  return {"fig1",      "saddle2d",  "cubic2d",   "quad_sc",
          "pl_noncvx", "conv_deg1", "rosenbrock"};
}

CorpusEntry corpus_entry(const std::string& id) {
  if (id == "fig1") return make_fig1();
  if (id == "saddle2d") return make_saddle2d();
  if (id == "cubic2d") return make_cubic2d();
  if (id == "quad_sc") return make_quad_sc(Vec::Ones(2));
  if (id == "pl_noncvx") return make_pl_noncvx();
  if (id == "conv_deg1") return make_conv_deg1();
  if (id == "rosenbrock") return make_rosenbrock();
  throw UnknownObjective(id);
}

CorpusEntry make_quad_sc(const Vec& spectrum, std::uint64_t rotation_seed) {
  const int n = static_cast<int>(spectrum.size());
  if (n == 0) throw InputError("quad_sc: empty spectrum");
  if (spectrum.minCoeff() <= 0.0) {
    throw InputError("quad_sc: spectrum must be positive");
  }
  Mat Q = Mat::Identity(n, n);
  if (rotation_seed != 0) {
    std::mt19937_64 rng(rotation_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat G(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) G(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Mat> qr(G);
    Q = qr.householderQ();
  }
  Mat A = Q * spectrum.asDiagonal() * Q.transpose();
  A = 0.5 * (A + A.transpose());
  EvalFn fn = [A](const Vec& x, int order) {
    Evaluation e;
    const Vec Ax = A * x;
    e.f = 0.5 * x.dot(Ax);
    if (order >= 1) e.g = Ax;
    if (order >= 2) e.H = A;
    return e;
  };
  KnownConstants k;
  k.L1 = spectrum.maxCoeff();
  k.L2 = 0.0;
  Box box{Vec::Constant(n, -2.0), Vec::Constant(n, 2.0)};
  Objective obj("quad_sc", n, fn, box, 2, true, 0.0, k);
  return {obj,
          {2.0 * spectrum.minCoeff(), 0.0},
          {ClassTag::kPL, ClassTag::kGradientDominated2}};
}

}  // namespace regional
