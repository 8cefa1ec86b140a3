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

#include <cmath>
#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "regional/subproblems.hpp"

using namespace regional;
using Catch::Approx;

namespace {

Mat diag(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

Vec vec(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("leftmost_eig on small diagonal matrices") {
  const EigPair a = leftmost_eig(diag({2, -2}));
  CHECK(a.lambda == -2.0);
  CHECK(a.v.isApprox(vec({0, 1})));
  CHECK(leftmost_eig(Mat::Identity(3, 3)).lambda == Approx(1.0));
}

TEST_CASE("leftmost_eig matches the bisection oracle") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const Mat H = oracle::random_symmetric(n, 3.0, rng);
    const EigPair e = leftmost_eig(H);
    CHECK(e.lambda == Approx(oracle::smallest_eig(H)).margin(1e-8));
    CHECK((H * e.v - e.lambda * e.v).norm() <= 1e-8);
    CHECK(e.v.norm() == Approx(1.0).margin(1e-12));
    int first = 0;
    while (first < n && std::abs(e.v(first)) < 1e-14) ++first;
    REQUIRE(first < n);
    CHECK(e.v(first) > 0.0);
  }
}

TEST_CASE("eigendecompose rejects asymmetric input and large matrices") {
  Mat H = Mat::Identity(2, 2);
  H(0, 1) = 1e-3;
  CHECK_THROWS_AS(leftmost_eig(H), InputError);
  CHECK_THROWS_AS(leftmost_eig(Mat::Identity(4, 4), 3), InputError);
}

TEST_CASE("solve_tr interior Newton step") {
  const TrSolution s = solve_tr(vec({1, 0}), Mat::Identity(2, 2), 2.0);
  CHECK(s.s.isApprox(vec({-1, 0})));
  CHECK(s.multiplier == 0.0);
  CHECK_FALSE(s.hard_case);
}

TEST_CASE("solve_tr boundary step") {
  const TrSolution s = solve_tr(vec({3, 0}), Mat::Identity(2, 2), 1.0);
  CHECK(s.s(0) == Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(s.s(1)) < 1e-14);
  CHECK(s.multiplier == Approx(2.0).epsilon(1e-10));
}

TEST_CASE("solve_tr hard case") {
  const Vec g = vec({0, 1});
  const Mat H = diag({-2, 1});
  const TrSolution s = solve_tr(g, H, 1.0);
  CHECK(s.hard_case);
  CHECK(s.multiplier == Approx(2.0).epsilon(1e-10));
  CHECK(s.s(0) == Approx(std::sqrt(8.0) / 3.0).epsilon(1e-10));
  CHECK(s.s(1) == Approx(-1.0 / 3.0).epsilon(1e-10));
  // Dense grid over the disk, zoomed three times around the best cell.
  Vec center = Vec::Zero(2);
  double half = 1.0;
  double best = 1e300;
  const int N = 401;
  for (int level = 0; level < 4; ++level) {
    Vec arg = center;
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        const Vec p = center + half * vec({-1.0 + 2.0 * i / (N - 1),
                                           -1.0 + 2.0 * j / (N - 1)});
        if (p.norm() > 1.0) continue;
        const double m = oracle::tr_model(g, H, p);
        if (m < best) {
          best = m;
          arg = p;
        }
      }
    }
    center = arg;
    half *= 0.02;
  }
  CHECK(oracle::tr_model(g, H, s.s) <= best + 1e-6);
  CHECK(oracle::tr_model(g, H, s.s) == Approx(best).margin(1e-6));
}

TEST_CASE("solve_tr rejects bad inputs") {
  CHECK_THROWS_AS(solve_tr(vec({1, 0}), Mat::Identity(2, 2), 0.0), InputError);
  CHECK_THROWS_AS(solve_tr(vec({1, 0}), Mat::Identity(2, 2), -1.0), InputError);
  CHECK_THROWS_AS(solve_tr(vec({1, 0, 0}), Mat::Identity(2, 2), 1.0), InputError);
}

TEST_CASE("solve_tr invariants and global optimality on random instances") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 4;
    const Mat H = oracle::random_symmetric(n, 2.0, rng);
    const Vec g = oracle::random_vec(n, 2.0, rng);
    const double delta = std::uniform_real_distribution<double>(0.05, 3.0)(rng);
    const TrSolution s = solve_tr(g, H, delta);
    CHECK(s.s.norm() <= delta * (1 + 1e-10));
    CHECK(s.multiplier >= 0.0);
    CHECK(s.multiplier * (delta - s.s.norm()) <= 1e-8 * (1 + delta));
    CHECK(s.model_decrease >= -1e-12);
    CHECK(s.model_decrease == -oracle::tr_model(g, H, s.s));
    CHECK(s.kkt_residual <= 1e-8);
    CHECK(oracle::tr_model(g, H, s.s) <= oracle::tr_value(g, H, delta) + 1e-6);
  }
}

TEST_CASE("solve_tr is scale consistent") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 4;
    const Mat H = oracle::random_symmetric(n, 2.0, rng);
    const Vec g = oracle::random_vec(n, 2.0, rng);
    const TrSolution a = solve_tr(g, H, 1.0);
    const TrSolution b = solve_tr(3.0 * g, 3.0 * H, 1.0);
    CHECK(b.model_decrease == Approx(3.0 * a.model_decrease).epsilon(1e-9));
    CHECK((a.s - b.s).norm() <= 1e-8);
  }
}

TEST_CASE("solvers are deterministic") {
  std::mt19937_64 rng(4);
  const Mat H = oracle::random_symmetric(4, 2.0, rng);
  const Vec g = oracle::random_vec(4, 2.0, rng);
  CHECK(solve_tr(g, H, 0.7).s == solve_tr(g, H, 0.7).s);
  CHECK(solve_cubic(g, H, 0.7).s == solve_cubic(g, H, 0.7).s);
}

TEST_CASE("solve_cubic with zero gradient and negative curvature") {
  const CubicSolution c = solve_cubic(vec({0}), diag({-1}), 1.0);
  CHECK(c.s(0) == Approx(1.0).epsilon(1e-12));
  CHECK(c.model_decrease == Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(c.hard_case);
}

TEST_CASE("solve_cubic one-dimensional secular root") {
  const CubicSolution c = solve_cubic(vec({1}), diag({1}), 1.0);
  // (1 + |s|) s = -1 has the root s = -(sqrt(5) - 1) / 2.
  const double root = -(std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(std::abs(c.s(0) - root) <= 1e-8);
  CHECK(c.shift == Approx(std::abs(root)).epsilon(1e-10));
}

TEST_CASE("solve_cubic returns zero on convex models with zero gradient") {
  const CubicSolution c = solve_cubic(vec({0, 0}), diag({1, 0}), 2.0);
  CHECK(c.s.norm() == 0.0);
  CHECK(c.model_decrease == 0.0);
}

TEST_CASE("solve_cubic rejects bad sigma") {
  CHECK_THROWS_AS(solve_cubic(vec({1}), diag({1}), 0.0), InputError);
  CHECK_THROWS_AS(solve_cubic(vec({1}), diag({1}), -2.0), InputError);
}

TEST_CASE("solve_cubic invariants and optimality on random instances") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const Mat H = oracle::random_symmetric(n, 2.0, rng);
    const Vec g = oracle::random_vec(n, 2.0, rng);
    const double sigma = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
    const CubicSolution c = solve_cubic(g, H, sigma);
    const Mat shifted = H + c.shift * Mat::Identity(n, n);
    CHECK((shifted * c.s + g).norm() <= 1e-8 * (1 + g.norm()));
    CHECK(oracle::smallest_eig(H) + c.shift >= -1e-10);
    CHECK(c.shift == Approx(sigma * c.s.norm()).epsilon(1e-12));
    CHECK(oracle::cubic_model(g, H, sigma, c.s) <=
          oracle::cubic_value(g, H, sigma, 10, rng) + 1e-6);
  }
}
