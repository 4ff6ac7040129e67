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

#include "polybase/submodular.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "polybase/errors.h"

namespace polybase {
namespace internal {

// Base of every expression node: owns the ground set and a memo table with
// one slot per subset. Slots are written at most with the same value, so
// relaxed atomics are enough to make concurrent evaluation safe.
class Node {
 public:
  Node(GroundSet ground, NodeKind kind)
      : ground_(std::move(ground)),
        kind_(kind),
        memo_(std::make_unique<std::atomic<std::int64_t>[]>(
            ground_.subset_count())) {
    for (std::uint32_t u = 0; u < ground_.subset_count(); ++u) {
      memo_[u].store(kUnknown, std::memory_order_relaxed);
    }
  }
  virtual ~Node() = default;

  const GroundSet& ground() const { return ground_; }
  NodeKind kind() const { return kind_; }

  std::int64_t Eval(Mask u) const {
    std::int64_t v = memo_[u].load(std::memory_order_relaxed);
    if (v != kUnknown) return v;
    v = Compute(u);
    memo_[u].store(v, std::memory_order_relaxed);
    return v;
  }

  virtual std::string Describe() const = 0;

 protected:
  virtual std::int64_t Compute(Mask u) const = 0;

 private:
  static constexpr std::int64_t kUnknown =
      std::numeric_limits<std::int64_t>::min();

  GroundSet ground_;
  NodeKind kind_;
  std::unique_ptr<std::atomic<std::int64_t>[]> memo_;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

class TableNode final : public Node {
 public:
  TableNode(GroundSet g, std::vector<std::int64_t> values)
      : Node(std::move(g), NodeKind::kTable), values_(std::move(values)) {}
  std::string Describe() const override { return "table"; }

 protected:
  std::int64_t Compute(Mask u) const override { return values_[u]; }

 private:
  std::vector<std::int64_t> values_;
};

class UniformNode final : public Node {
 public:
  UniformNode(GroundSet g, int rank)
      : Node(std::move(g), NodeKind::kUniformRank), rank_(rank) {}
  std::string Describe() const override {
    return "uniform(" + std::to_string(rank_) + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    return std::min(PopCount(u), rank_);
  }

 private:
  int rank_;
};

class PartitionNode final : public Node {
 public:
  PartitionNode(GroundSet g, std::vector<Mask> blocks,
                std::vector<std::int64_t> caps)
      : Node(std::move(g), NodeKind::kPartitionRank),
        blocks_(std::move(blocks)),
        caps_(std::move(caps)) {}
  std::string Describe() const override {
    std::string out = "partition(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i > 0) out += ' ';
      out += ground().Format(blocks_[i]) + ":" + std::to_string(caps_[i]);
    }
    return out + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      total += std::min<std::int64_t>(PopCount(u & blocks_[i]), caps_[i]);
    }
    return total;
  }

 private:
  std::vector<Mask> blocks_;
  std::vector<std::int64_t> caps_;
};

class GraphicNode final : public Node {
 public:
  GraphicNode(GroundSet g, int vertices, std::vector<std::pair<int, int>> edges)
      : Node(std::move(g), NodeKind::kGraphicRank),
        vertices_(vertices),
        edges_(std::move(edges)) {}
  std::string Describe() const override {
    return "graphic(" + std::to_string(vertices_) + ")";
  }

 protected:
  // Rank of an edge set is the number of edges in a spanning forest, i.e.
  // the number of unions that merge two components.
  std::int64_t Compute(Mask u) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::int64_t rank = 0;
    for (int i : Elements(u)) {
      int a = find(edges_[i].first);
      int b = find(edges_[i].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

class DualNode final : public Node {
 public:
  explicit DualNode(NodePtr inner)
      : Node(inner->ground(), NodeKind::kDual), inner_(std::move(inner)) {}
  std::string Describe() const override {
    return "dual(" + inner_->Describe() + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    const Mask full = ground().full();
    return inner_->Eval(full & ~u) - inner_->Eval(full);
  }

 private:
  NodePtr inner_;
};

class ShiftNode final : public Node {
 public:
  ShiftNode(NodePtr inner, IntVector a)
      : Node(inner->ground(), NodeKind::kShift),
        inner_(std::move(inner)),
        a_(std::move(a)) {}
  std::string Describe() const override {
    return "shift(" + inner_->Describe() + ", " + a_.ToString() + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    return inner_->Eval(u) + a_.Sum(u);
  }

 private:
  NodePtr inner_;
  IntVector a_;
};

// Shared by Reduce and ReduceAt; the latter only differs in how `a` was
// built and how it prints.
class ReduceNode final : public Node {
 public:
  ReduceNode(NodePtr inner, IntVector a, NodeKind kind, int e0, std::int64_t c)
      : Node(inner->ground(), kind),
        inner_(std::move(inner)),
        a_(std::move(a)),
        e0_(e0),
        c_(c) {}
  std::string Describe() const override {
    if (kind() == NodeKind::kReduceAt) {
      return "reduce_at(" + inner_->Describe() + ", " + ground().name(e0_) +
             ", " + std::to_string(c_) + ")";
    }
    return "reduce(" + inner_->Describe() + ", " + a_.ToString() + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    std::int64_t best = inner_->Eval(u);
    for (Mask t = u; t != 0;) {
      t = (t - 1) & u;
      best = std::min(best, inner_->Eval(t) + a_.Sum(u & ~t));
    }
    return best;
  }

 private:
  NodePtr inner_;
  IntVector a_;
  int e0_;
  std::int64_t c_;
};

class ScaleNode final : public Node {
 public:
  ScaleNode(NodePtr inner, std::int64_t r)
      : Node(inner->ground(), NodeKind::kScale),
        inner_(std::move(inner)),
        r_(r) {}
  std::string Describe() const override {
    return "scale(" + std::to_string(r_) + ", " + inner_->Describe() + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override { return r_ * inner_->Eval(u); }

 private:
  NodePtr inner_;
  std::int64_t r_;
};

class BlockRestrictNode final : public Node {
 public:
  BlockRestrictNode(NodePtr inner, Mask prefix, Mask block)
      : Node(inner->ground().Subset(block), NodeKind::kBlockRestrict),
        inner_(std::move(inner)),
        prefix_(prefix),
        block_(block),
        positions_(Elements(block)),
        base_(inner_->Eval(prefix)) {}
  std::string Describe() const override {
    const GroundSet& parent = inner_->ground();
    return "block(" + inner_->Describe() + ", " + parent.Format(prefix_) +
           ", " + parent.Format(block_) + ")";
  }

 protected:
  std::int64_t Compute(Mask u) const override {
    return inner_->Eval(prefix_ | Lift(u, positions_)) - base_;
  }

 private:
  NodePtr inner_;
  Mask prefix_;
  Mask block_;
  std::vector<int> positions_;
  std::int64_t base_;
};

void CheckLength(const SubmodularFn& f, const IntVector& a, const char* op) {
  if (a.size() != f.size()) {
    throw UsageError(std::string(op) + ": vector has " +
                     std::to_string(a.size()) + " entries, ground set has " +
                     std::to_string(f.size()));
  }
}

}  // namespace
}  // namespace internal

using internal::Node;

SubmodularFn SubmodularFn::Table(GroundSet ground,
                                 std::vector<std::int64_t> values) {
  if (values.size() != ground.subset_count()) {
    throw UsageError("table needs " + std::to_string(ground.subset_count()) +
                     " values, got " + std::to_string(values.size()));
  }
  if (values[0] != 0) throw UsageError("table value at the empty set must be 0");
  return SubmodularFn(std::make_shared<internal::TableNode>(std::move(ground),
                                                            std::move(values)));
}

SubmodularFn SubmodularFn::UniformRank(GroundSet ground, int rank) {
  if (rank < 0) throw UsageError("uniform rank must be nonnegative");
  return SubmodularFn(
      std::make_shared<internal::UniformNode>(std::move(ground), rank));
}

SubmodularFn SubmodularFn::PartitionRank(GroundSet ground,
                                         std::vector<Mask> blocks,
                                         std::vector<std::int64_t> caps) {
  if (blocks.size() != caps.size()) {
    throw UsageError("partition: blocks and caps differ in length");
  }
  Mask seen = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!ground.Contains(blocks[i])) {
      throw UsageError("partition: block outside the ground set");
    }
    if (seen & blocks[i]) throw UsageError("partition: blocks overlap");
    if (caps[i] < 0) throw UsageError("partition: negative cap");
    seen |= blocks[i];
  }
  return SubmodularFn(std::make_shared<internal::PartitionNode>(
      std::move(ground), std::move(blocks), std::move(caps)));
}

SubmodularFn SubmodularFn::GraphicRank(GroundSet ground, int vertices,
                                       std::vector<std::pair<int, int>> edges) {
  if (static_cast<int>(edges.size()) != ground.size()) {
    throw UsageError("graphic: need exactly one edge per ground element");
  }
  if (vertices < 1) throw UsageError("graphic: need at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw UsageError("graphic: edge endpoint out of range");
    }
  }
  return SubmodularFn(std::make_shared<internal::GraphicNode>(
      std::move(ground), vertices, std::move(edges)));
}

const GroundSet& SubmodularFn::ground() const { return node_->ground(); }
NodeKind SubmodularFn::kind() const { return node_->kind(); }

std::int64_t SubmodularFn::Eval(Mask u) const {
  if (!ground().Contains(u)) {
    throw UsageError("subset mask " + std::to_string(u) +
                     " is outside a ground set of size " +
                     std::to_string(size()));
  }
  return node_->Eval(u);
}

std::vector<std::int64_t> SubmodularFn::Values() const {
  std::vector<std::int64_t> out(ground().subset_count());
  for (std::uint32_t u = 0; u < out.size(); ++u) out[u] = node_->Eval(u);
  return out;
}

SubmodularFn SubmodularFn::Materialize() const {
  return Table(ground(), Values());
}

std::string SubmodularFn::Describe() const { return node_->Describe(); }

SubmodularFn Dual(const SubmodularFn& f) {
  return SubmodularFn(std::make_shared<internal::DualNode>(f.node_));
}

SubmodularFn Shift(const SubmodularFn& f, const IntVector& a) {
  internal::CheckLength(f, a, "shift");
  return SubmodularFn(std::make_shared<internal::ShiftNode>(f.node_, a));
}

SubmodularFn Reduce(const SubmodularFn& f, const IntVector& a) {
  internal::CheckLength(f, a, "reduce");
  return SubmodularFn(std::make_shared<internal::ReduceNode>(
      f.node_, a, NodeKind::kReduce, -1, 0));
}

SubmodularFn ReduceAt(const SubmodularFn& f, int e0, std::int64_t c) {
  if (e0 < 0 || e0 >= f.size()) {
    throw UsageError("reduce_at: element index out of range");
  }
  IntVector a(f.size());
  for (int e = 0; e < f.size(); ++e) a[e] = e == e0 ? c : f.Eval(Bit(e));
  return SubmodularFn(std::make_shared<internal::ReduceNode>(
      f.node_, std::move(a), NodeKind::kReduceAt, e0, c));
}

SubmodularFn Scale(std::int64_t r, const SubmodularFn& f) {
  if (r < 1) throw UsageError("scale factor must be a positive integer");
  return SubmodularFn(std::make_shared<internal::ScaleNode>(f.node_, r));
}

SubmodularFn BlockRestrict(const SubmodularFn& f, Mask prefix, Mask block) {
  if (!f.ground().Contains(prefix) || !f.ground().Contains(block)) {
    throw UsageError("block_restrict: mask outside the ground set");
  }
  if (block == 0) throw UsageError("block_restrict: empty block");
  if (prefix & block) {
    throw UsageError("block_restrict: prefix and block overlap");
  }
  return SubmodularFn(
      std::make_shared<internal::BlockRestrictNode>(f.node_, prefix, block));
}

SubmodularityReport IsSubmodular(const SubmodularFn& f) {
  const std::vector<std::int64_t> v = f.Values();
  if (v[0] != 0) return {false, std::make_pair(Mask{0}, Mask{0})};
  const Mask count = f.ground().subset_count();
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = a + 1; b < count; ++b) {
      if (v[a] + v[b] < v[a | b] + v[a & b]) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {};
}

bool IsMatroidRank(const SubmodularFn& f) {
  const std::vector<std::int64_t> v = f.Values();
  const int n = f.size();
  for (Mask u = 0; u < v.size(); ++u) {
    if (v[u] < 0 || v[u] > PopCount(u)) return false;
    for (int e = 0; e < n; ++e) {
      if (!(u & Bit(e)) && v[u | Bit(e)] < v[u]) return false;
    }
  }
  return true;
}

}  // namespace polybase
