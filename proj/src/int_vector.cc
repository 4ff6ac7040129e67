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

#include "polybase/int_vector.h"

#include <cassert>

namespace polybase {

std::int64_t IntVector::Sum(Mask m) const {
  std::int64_t s = 0;
  for (int i : Elements(m)) s += v_[i];
  return s;
}

std::int64_t IntVector::Total() const {
  std::int64_t s = 0;
  for (auto x : v_) s += x;
  return s;
}

IntVector IntVector::Restrict(Mask block) const {
  std::vector<std::int64_t> out;
  for (int i : Elements(block)) out.push_back(v_[i]);
  return IntVector(std::move(out));
}

IntVector& IntVector::operator+=(const IntVector& o) {
  assert(o.size() == size());
  for (int i = 0; i < size(); ++i) v_[i] += o.v_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& o) {
  assert(o.size() == size());
  for (int i = 0; i < size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

std::string IntVector::ToString() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v_[i]);
  }
  return out + ")";
}

}  // namespace polybase
