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

#ifndef POLYBASE_POLYTOPE_H_
#define POLYBASE_POLYTOPE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polybase/int_vector.h"
#include "polybase/submodular.h"

namespace polybase {

struct Membership {
  bool member = true;
  // First U in increasing mask order with x(U) > f(U); for base-polytope
  // queries where only x(E) = f(E) fails, the full set.
  std::optional<Mask> violated;
  explicit operator bool() const { return member; }
};

// x(U) <= f(U) for every U.
Membership InExtendedPolymatroid(const SubmodularFn& f, const IntVector& x);
// ... and x(E) = f(E).
Membership InBasePolytope(const SubmodularFn& f, const IntVector& x);

struct Box {
  IntVector lower;
  IntVector upper;
};

// f(E) - f(E - e) <= x(e) <= f({e}) on B_f.
Box BoundingBox(const SubmodularFn& f);

// x(e_i) = f({e_1..e_i}) - f({e_1..e_{i-1}}) along `order`, a permutation of
// the ground positions. For submodular f the result is a vertex of B_f.
IntVector GreedyVertex(const SubmodularFn& f, std::span<const int> order);

// Sets that are tight on all of B_f, found via f(U) + f(E \ U) = f(E).
// Increasing mask order; always contains the empty set and E.
std::vector<Mask> TightSets(const SubmodularFn& f);

// A face of a base polytope written as B_{f_1} (+) ... (+) B_{f_t}.
struct FaceStructure {
  // {} = A_0 < A_1 < ... < A_t = E.
  std::vector<Mask> chain;
  // blocks[i] = A_{i+1} \ A_i.
  std::vector<Mask> blocks;
  // block_fns[i](U) = f(A_i | U) - f(A_i) on the ground set of blocks[i].
  std::vector<SubmodularFn> block_fns;
  int dim = 0;
};

// Maximal chain through a lattice of subsets containing {} and `full`, built
// by always stepping to the smallest-mask strict superset in the family.
std::vector<Mask> MaximalChain(std::span<const Mask> family, Mask full);

// Factorization of B_f itself. With a single block the block function is f.
FaceStructure FaceStructureOf(const SubmodularFn& f);

// |E| - t for the chain length t of TightSets(f).
int Dimension(const SubmodularFn& f);

// The inclusion-minimal face of B_f containing x / k, described through the
// tight family {U : x(U) = k f(U)}. Requires x in k B_f (UsageError
// otherwise). Block functions are restrictions of f, not of k f.
FaceStructure MinimalFace(const SubmodularFn& f, const IntVector& x,
                          std::int64_t k = 1);

inline FaceStructure MinimalFaceOfPoint(const SubmodularFn& f,
                                        const IntVector& x) {
  return MinimalFace(f, x, 1);
}

}  // namespace polybase

#endif  // POLYBASE_POLYTOPE_H_
