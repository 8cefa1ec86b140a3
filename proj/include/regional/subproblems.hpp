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

#ifndef REGIONAL_SUBPROBLEMS_HPP_
#define REGIONAL_SUBPROBLEMS_HPP_

#include "regional/objective.hpp"

namespace regional {

inline constexpr int kDenseLimit = 500;

struct SymEig {
  Vec values;   // ascending
  Mat vectors;  // columns; column 0 sign-normalized
};

// Full decomposition of a symmetric matrix. Eigenvector 0 has its first
// nonzero component positive.
SymEig eigendecompose(const Mat& H, int dense_limit = kDenseLimit);

struct EigPair {
  double lambda = 0.0;
  Vec v;
};

EigPair leftmost_eig(const Mat& H, int dense_limit = kDenseLimit);

struct TrSolution {
  Vec s;
  double multiplier = 0.0;
  double kkt_residual = 0.0;
  bool hard_case = false;
  double model_decrease = 0.0;  // -(g's + s'Hs/2)
};

// Global minimizer of g's + s'Hs/2 subject to ||s|| <= delta.
TrSolution solve_tr(const Vec& g, const Mat& H, double delta);

struct CubicSolution {
  Vec s;
  double shift = 0.0;  // sigma * ||s||
  double kkt_residual = 0.0;
  bool hard_case = false;
  double model_decrease = 0.0;  // -(g's + s'Hs/2 + sigma/3 ||s||^3)
};

// Minimum-norm global minimizer of g's + s'Hs/2 + sigma/3 ||s||^3.
CubicSolution solve_cubic(const Vec& g, const Mat& H, double sigma);

}  // namespace regional

#endif  // REGIONAL_SUBPROBLEMS_HPP_
