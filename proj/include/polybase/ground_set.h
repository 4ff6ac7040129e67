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

#ifndef POLYBASE_GROUND_SET_H_
#define POLYBASE_GROUND_SET_H_

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polybase {

// A subset of a ground set, bit i standing for the i-th element.
// Only meaningful relative to the GroundSet it was built against.
using Mask = std::uint32_t;

// Largest ground set the mask representation can hold at all. The working
// limit (GroundSetLimit) is much smaller since most queries are 2^n or 3^n.
inline constexpr int kMaxGroundSize = 20;
inline constexpr int kDefaultGroundLimit = 12;

// Process-wide cap on ground-set size. Defaults to POLYBASE_LIMIT_N when set,
// else kDefaultGroundLimit.
int GroundSetLimit();
void SetGroundSetLimit(int limit);

inline int PopCount(Mask m) { return std::popcount(m); }
inline bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask Bit(int i) { return Mask{1} << i; }

// Ordered list of distinct element names. The order is fixed at construction
// and drives all canonical iteration and tie-breaking.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  Mask full() const { return Bit(size()) - 1; }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }

  // -1 when absent.
  int IndexOf(std::string_view name) const;
  bool Contains(Mask m) const { return IsSubset(m, full()); }

  // The sub-ground-set of the elements in `m`, in the same relative order.
  GroundSet Subset(Mask m) const;

  // "{a,b}" with elements in ground order; "{}" for the empty set.
  std::string Format(Mask m) const;

  bool operator==(const GroundSet& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Positions (within the parent) of the elements of `m`, increasing.
std::vector<int> Elements(Mask m);

// Scatters a mask over `positions` back into parent coordinates:
// bit i of `local` maps to bit positions[i].
Mask Lift(Mask local, const std::vector<int>& positions);

}  // namespace polybase

#endif  // POLYBASE_GROUND_SET_H_
