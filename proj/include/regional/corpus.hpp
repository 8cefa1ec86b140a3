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

#ifndef REGIONAL_CORPUS_HPP_
#define REGIONAL_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "regional/objective.hpp"

namespace regional {

enum class ClassTag {
  kPL,
  kGradientDominated1,
  kGradientDominated2,
  kGHDominated23,
  kSaddle,
  kUnboundedBelow,
};

std::string tag_name(ClassTag tag);

struct RecommendedParams {
  double kappa = 1.0;
  double f_ref = 0.0;
};

struct CorpusEntry {
  Objective objective;
  RecommendedParams recommended;
  std::vector<ClassTag> tags;
};

class UnknownObjective : public InputError {
 public:
  explicit UnknownObjective(const std::string& id)
      : InputError("unknown objective: " + id) {}
};

// Ids in manifest order.
std::vector<std::string> corpus_ids();

// Throws UnknownObjective for ids not in the corpus.
CorpusEntry corpus_entry(const std::string& id);

// f(x) = 0.5 x^T A x with A = Q diag(spectrum) Q^T. Q is the identity for
// rotation_seed == 0, otherwise a seeded random orthogonal matrix.
CorpusEntry make_quad_sc(const Vec& spectrum, std::uint64_t rotation_seed = 0);

}  // namespace regional

#endif  // REGIONAL_CORPUS_HPP_
