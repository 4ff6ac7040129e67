// Copyright 2026 The Polybase Authors.
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

#ifndef POLYBASE_DECOMPOSITION_H_
#define POLYBASE_DECOMPOSITION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "polybase/exact_lp.h"
#include "polybase/int_vector.h"
#include "polybase/submodular.h"

namespace polybase {

struct Term {
  std::int64_t weight = 0;
  IntVector point;
  friend bool operator==(const Term&, const Term&) = default;
};

// target = sum weight_i * point_i with sum weight_i = k.
struct WeightedDecomposition {
  std::vector<Term> terms;
  IntVector target;
  std::int64_t k = 0;

  int distinct() const { return static_cast<int>(terms.size()); }
};

// Merges terms with equal points and sorts terms by point.
void Canonicalize(WeightedDecomposition& d);

// One node of the recursion. `kind` is one of "base" (|E| = 1), "single"
// (k = 1), "direct_sum", "face_drop" (r = 0), "main_split" and "face" (the
// minimal face of x' or x'' below a main split).
struct TraceNode {
  std::string kind;
  std::string function;
  IntVector w;
  std::int64_t k = 0;
  std::optional<std::string> element;
  std::int64_t q = 0;
  std::int64_t r = 0;
  // main_split only: the two functions whose base polytopes form P, the
  // chosen vertex x' and x'' = w - x'.
  std::vector<std::string> intersection;
  std::optional<IntVector> x_prime;
  std::optional<IntVector> x_double_prime;
  std::vector<Mask> blocks;
  std::vector<TraceNode> children;
};

nlohmann::json TraceToJson(const TraceNode& node);

struct DecomposeOptions {
  LpOptions lp;
};

struct DecompositionResult {
  WeightedDecomposition decomposition;
  TraceNode trace;
};

// k integer points of B_f summing to x, for x in k B_f. Each step takes an
// integer vertex x_k of B_f intersected with B_{x + (k-1) f*}, i.e. a base
// whose removal leaves x - x_k in (k-1) B_f.
std::vector<IntVector> SplitIntoKBases(const SubmodularFn& f,
                                       const IntVector& x, std::int64_t k,
                                       const LpOptions& options = {});

// Combines decompositions of the blocks of a direct sum (all with the same
// k) by interleaving their cumulative weights. `blocks[i]` places part i's
// coordinates inside a vector of length `n`. The result has at most
// sum(|terms_i|) - (t - 1) terms.
WeightedDecomposition MergeDirectSum(std::span<const WeightedDecomposition> parts,
                                     std::span<const Mask> blocks, int n);

// Writes w in k B_f as an integer combination of at most dim B_f + 1
// distinct integer bases. f must be submodular.
DecompositionResult Decompose(const SubmodularFn& f, const IntVector& w,
                              std::int64_t k,
                              const DecomposeOptions& options = {});

struct Verification {
  bool ok = true;
  std::vector<std::string> failures;
};

// Independent certificate check, using only f and the decomposition.
Verification Verify(const SubmodularFn& f, const WeightedDecomposition& d);

}  // namespace polybase

#endif  // POLYBASE_DECOMPOSITION_H_
