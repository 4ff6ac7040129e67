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

#ifndef POLYBASE_INT_VECTOR_H_
#define POLYBASE_INT_VECTOR_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "polybase/ground_set.h"

namespace polybase {

// Integer vector indexed by ground-set position. x(U) is Sum(U).
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(int n, std::int64_t fill = 0) : v_(n, fill) {}
  IntVector(std::initializer_list<std::int64_t> init) : v_(init) {}
  explicit IntVector(std::vector<std::int64_t> v) : v_(std::move(v)) {}

  int size() const { return static_cast<int>(v_.size()); }
  std::int64_t& operator[](int i) { return v_[i]; }
  std::int64_t operator[](int i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<std::int64_t>& values() const { return v_; }

  std::int64_t Sum(Mask m) const;
  std::int64_t Total() const;

  // Coordinates at the elements of `block`, in ground order.
  IntVector Restrict(Mask block) const;

  IntVector& operator+=(const IntVector& o);
  IntVector& operator-=(const IntVector& o);

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(std::int64_t s, IntVector a) {
    for (auto& x : a.v_) x *= s;
    return a;
  }
  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

  // "(1,0,2)"
  std::string ToString() const;

 private:
  std::vector<std::int64_t> v_;
};

// Floor division and the matching nonnegative remainder.
inline std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace polybase

#endif  // POLYBASE_INT_VECTOR_H_
