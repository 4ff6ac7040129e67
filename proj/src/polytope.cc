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

#include "polybase/polytope.h"

#include <algorithm>

#include "polybase/errors.h"

namespace polybase {
namespace {

// x(U) for all U, by extending the sum one element at a time.
std::vector<std::int64_t> SubsetSums(const IntVector& x) {
  std::vector<std::int64_t> sums(std::size_t{1} << x.size(), 0);
  for (Mask u = 1; u < sums.size(); ++u) {
    const int low = std::countr_zero(u);
    sums[u] = sums[u & (u - 1)] + x[low];
  }
  return sums;
}

void CheckDimension(const SubmodularFn& f, const IntVector& x) {
  if (x.size() != f.size()) {
    throw UsageError("vector has " + std::to_string(x.size()) +
                     " entries, ground set has " + std::to_string(f.size()));
  }
}

FaceStructure BuildFace(const SubmodularFn& f, std::vector<Mask> chain) {
  FaceStructure face;
  const int t = static_cast<int>(chain.size()) - 1;
  face.dim = f.size() - t;
  if (t == 1) {
    face.blocks.push_back(f.ground().full());
    face.block_fns.push_back(f);
  } else {
    for (int i = 1; i <= t; ++i) {
      const Mask block = chain[i] & ~chain[i - 1];
      face.blocks.push_back(block);
      face.block_fns.push_back(BlockRestrict(f, chain[i - 1], block));
    }
  }
  face.chain = std::move(chain);
  return face;
}

}  // namespace

Membership InExtendedPolymatroid(const SubmodularFn& f, const IntVector& x) {
  CheckDimension(f, x);
  const std::vector<std::int64_t> sums = SubsetSums(x);
  for (Mask u = 1; u < sums.size(); ++u) {
    if (sums[u] > f.Eval(u)) return {false, u};
  }
  return {};
}

Membership InBasePolytope(const SubmodularFn& f, const IntVector& x) {
  Membership m = InExtendedPolymatroid(f, x);
  if (!m) return m;
  if (x.Total() != f.Total()) return {false, f.ground().full()};
  return {};
}

Box BoundingBox(const SubmodularFn& f) {
  const int n = f.size();
  const Mask full = f.ground().full();
  Box box{IntVector(n), IntVector(n)};
  for (int e = 0; e < n; ++e) {
    box.lower[e] = f.Total() - f.Eval(full & ~Bit(e));
    box.upper[e] = f.Eval(Bit(e));
  }
  return box;
}

IntVector GreedyVertex(const SubmodularFn& f, std::span<const int> order) {
  const int n = f.size();
  if (static_cast<int>(order.size()) != n) {
    throw UsageError("greedy order must list every ground element once");
  }
  IntVector x(n);
  Mask prefix = 0;
  std::int64_t previous = 0;
  for (int e : order) {
    if (e < 0 || e >= n || (prefix & Bit(e))) {
      throw UsageError("greedy order is not a permutation");
    }
    prefix |= Bit(e);
    const std::int64_t value = f.Eval(prefix);
    x[e] = value - previous;
    previous = value;
  }
  return x;
}

std::vector<Mask> TightSets(const SubmodularFn& f) {
  const Mask full = f.ground().full();
  const std::int64_t total = f.Total();
  std::vector<Mask> out;
  for (Mask u = 0; u <= full; ++u) {
    if (f.Eval(u) + f.Eval(full & ~u) == total) out.push_back(u);
  }
  return out;
}

std::vector<Mask> MaximalChain(std::span<const Mask> family, Mask full) {
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Mask> chain{0};
  Mask current = 0;
  while (current != full) {
    // A subset has a smaller mask than any strict superset, so the first
    // strict superset in mask order is inclusion-minimal.
    auto next = std::find_if(sorted.begin(), sorted.end(), [&](Mask m) {
      return m != current && IsSubset(current, m);
    });
    if (next == sorted.end()) {
      throw InvariantViolation("tight family has no chain reaching E");
    }
    current = *next;
    chain.push_back(current);
  }
  return chain;
}

FaceStructure FaceStructureOf(const SubmodularFn& f) {
  const std::vector<Mask> tight = TightSets(f);
  return BuildFace(f, MaximalChain(tight, f.ground().full()));
}

int Dimension(const SubmodularFn& f) {
  const std::vector<Mask> tight = TightSets(f);
  return f.size() -
         (static_cast<int>(MaximalChain(tight, f.ground().full()).size()) - 1);
}

FaceStructure MinimalFace(const SubmodularFn& f, const IntVector& x,
                          std::int64_t k) {
  CheckDimension(f, x);
  if (k < 1) throw UsageError("face multiplicity must be positive");
  const std::vector<std::int64_t> sums = SubsetSums(x);
  std::vector<Mask> tight;
  for (Mask u = 0; u < sums.size(); ++u) {
    const std::int64_t bound = k * f.Eval(u);
    if (sums[u] > bound) {
      throw UsageError("point " + x.ToString() + " violates x(" +
                       f.ground().Format(u) + ") <= " + std::to_string(bound));
    }
    if (sums[u] == bound) tight.push_back(u);
  }
  const Mask full = f.ground().full();
  if (tight.empty() || tight.back() != full) {
    throw UsageError("point " + x.ToString() + " is off the base hyperplane");
  }
  return BuildFace(f, MaximalChain(tight, full));
}

}  // namespace polybase
