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

#ifndef POLYBASE_ORACLE_H_
#define POLYBASE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polybase/int_vector.h"
#include "polybase/submodular.h"

// Exhaustive reference computations for small instances. Nothing here uses
// the LP or the decomposition engine; it exists to check them.
namespace polybase::oracle {

struct Budget {
  // Integer points scanned in a bounding box.
  std::uint64_t box_points = 10'000'000;
  // Ground-set size for permutation enumeration.
  int max_permutation_n = 7;
  // Base points and multiplicity allowed in decomposition searches.
  int max_points = 20;
  std::int64_t max_k = 6;
};

struct PointSet {
  // Distinct, sorted lexicographically.
  std::vector<IntVector> points;
  std::string provenance;
};

// All integer points of B_f, by scanning its bounding box.
PointSet EnumerateBasePoints(const SubmodularFn& f, const Budget& budget = {});

// Integer points of k B_f, by scanning k times the bounding box.
PointSet EnumerateScaledBasePoints(const SubmodularFn& f, std::int64_t k,
                                   const Budget& budget = {});

// Greedy vertices over all n! orders.
PointSet EnumerateVertices(const SubmodularFn& f, const Budget& budget = {});

// Least number of distinct bases in a combination with total weight k equal
// to w; nullopt if none exists.
std::optional<int> MinDecompositionSize(const SubmodularFn& f,
                                        const IntVector& w, std::int64_t k,
                                        const Budget& budget = {});

struct CrLowerBound {
  int value = 0;
  // A witness attaining `value`.
  IntVector w;
  std::int64_t k = 0;
};

// max over k <= k_max and w in k B_f of MinDecompositionSize. A lower bound
// on the Caratheodory rank of the bases of f.
CrLowerBound CrExact(const SubmodularFn& f, std::int64_t k_max,
                     const Budget& budget = {});

}  // namespace polybase::oracle

#endif  // POLYBASE_ORACLE_H_
