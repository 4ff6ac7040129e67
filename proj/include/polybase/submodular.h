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

#ifndef POLYBASE_SUBMODULAR_H_
#define POLYBASE_SUBMODULAR_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polybase/ground_set.h"
#include "polybase/int_vector.h"

namespace polybase {

enum class NodeKind {
  kTable,
  kUniformRank,
  kPartitionRank,
  kGraphicRank,
  kDual,
  kShift,
  kReduce,
  kReduceAt,
  kScale,
  kBlockRestrict,
};

namespace internal {
class Node;
}  // namespace internal

// An integer set function f : 2^E -> Z with f(empty) = 0, held as a lazy
// expression tree. Copies share the tree. Every node memoizes its values in
// a lock-free table, so a function may be evaluated from several threads.
//
// Submodularity is not enforced at construction; see IsSubmodular.
class SubmodularFn {
 public:
  // `values` is indexed by mask and has 2^n entries; values[0] must be 0.
  static SubmodularFn Table(GroundSet ground, std::vector<std::int64_t> values);
  // min(|U|, rank).
  static SubmodularFn UniformRank(GroundSet ground, int rank);
  // sum_i min(|U & blocks[i]|, caps[i]). Blocks must be disjoint; elements
  // outside every block are loops.
  static SubmodularFn PartitionRank(GroundSet ground, std::vector<Mask> blocks,
                                    std::vector<std::int64_t> caps);
  // Element i is the edge edges[i] of a graph on `vertices` vertices; the
  // value is the size of a spanning forest of the chosen edges.
  static SubmodularFn GraphicRank(GroundSet ground, int vertices,
                                  std::vector<std::pair<int, int>> edges);

  const GroundSet& ground() const;
  int size() const { return ground().size(); }
  NodeKind kind() const;

  // Throws UsageError when `u` has bits outside the ground set.
  std::int64_t Eval(Mask u) const;
  std::int64_t operator()(Mask u) const { return Eval(u); }
  std::int64_t Total() const { return Eval(ground().full()); }

  // All 2^n values, indexed by mask.
  std::vector<std::int64_t> Values() const;
  // Same function as an explicit table node.
  SubmodularFn Materialize() const;

  // Readable expression, e.g. "reduce_at(uniform(2), a, 1)".
  std::string Describe() const;

 private:
  explicit SubmodularFn(std::shared_ptr<const internal::Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const internal::Node> node_;

  friend SubmodularFn Dual(const SubmodularFn& f);
  friend SubmodularFn Shift(const SubmodularFn& f, const IntVector& a);
  friend SubmodularFn Reduce(const SubmodularFn& f, const IntVector& a);
  friend SubmodularFn ReduceAt(const SubmodularFn& f, int e0, std::int64_t c);
  friend SubmodularFn Scale(std::int64_t r, const SubmodularFn& f);
  friend SubmodularFn BlockRestrict(const SubmodularFn& f, Mask prefix,
                                    Mask block);
};

// f*(U) = f(E \ U) - f(E). B_{f*} = -B_f.
SubmodularFn Dual(const SubmodularFn& f);

// (f + a)(U) = f(U) + a(U). B_{f+a} = a + B_f.
SubmodularFn Shift(const SubmodularFn& f, const IntVector& a);

// (f|a)(U) = min over T subset of U of f(T) + a(U \ T), so that
// EP_{f|a} = {x in EP_f : x <= a}. Each evaluation scans all subsets of U.
SubmodularFn Reduce(const SubmodularFn& f, const IntVector& a);

// f|a with a(e0) = c and a(e) = f({e}) elsewhere. When some base has
// x(e0) <= c, B_{f|(e0,c)} = {x in B_f : x(e0) <= c}.
SubmodularFn ReduceAt(const SubmodularFn& f, int e0, std::int64_t c);

// r * f, r >= 1.
SubmodularFn Scale(std::int64_t r, const SubmodularFn& f);

// g(U) = f(prefix | U) - f(prefix) on the ground set `block`. `prefix` and
// `block` are disjoint masks over f's ground set.
SubmodularFn BlockRestrict(const SubmodularFn& f, Mask prefix, Mask block);

struct SubmodularityReport {
  bool submodular = true;
  // First violating pair in canonical order (A increasing, then B > A).
  std::optional<std::pair<Mask, Mask>> violation;
};

// Exhaustive O(4^n) check, including f(empty) = 0.
SubmodularityReport IsSubmodular(const SubmodularFn& f);

// Nonnegative, nondecreasing and f(U) <= |U|. Assumes f is submodular.
bool IsMatroidRank(const SubmodularFn& f);

}  // namespace polybase

#endif  // POLYBASE_SUBMODULAR_H_
