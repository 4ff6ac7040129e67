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

#include "polybase/ground_set.h"

#include <atomic>
#include <cstdlib>
#include <set>
#include <string>

#include "polybase/errors.h"

namespace polybase {
namespace {

int LimitFromEnvironment() {
  const char* env = std::getenv("POLYBASE_LIMIT_N");
  if (env == nullptr || *env == '\0') return kDefaultGroundLimit;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxGroundSize) {
    throw UsageError("POLYBASE_LIMIT_N must be an integer in [1, " +
                     std::to_string(kMaxGroundSize) + "]");
  }
  return static_cast<int>(v);
}

std::atomic<int>& LimitSlot() {
  static std::atomic<int> slot{LimitFromEnvironment()};
  return slot;
}

}  // namespace

int GroundSetLimit() { return LimitSlot().load(std::memory_order_relaxed); }

void SetGroundSetLimit(int limit) {
  if (limit < 1 || limit > kMaxGroundSize) {
    throw UsageError("ground-set limit must be in [1, " +
                     std::to_string(kMaxGroundSize) + "]");
  }
  LimitSlot().store(limit, std::memory_order_relaxed);
}

GroundSet::GroundSet(std::vector<std::string> names) {
  if (names.empty()) throw UsageError("ground set must be nonempty");
  if (static_cast<int>(names.size()) > GroundSetLimit()) {
    throw UsageError("ground set of size " + std::to_string(names.size()) +
                     " exceeds the limit " + std::to_string(GroundSetLimit()));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw UsageError("duplicate ground element '" + n + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

int GroundSet::IndexOf(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return -1;
}

GroundSet GroundSet::Subset(Mask m) const {
  std::vector<std::string> names;
  for (int i : Elements(m)) names.push_back((*names_)[i]);
  return GroundSet(std::move(names));
}

std::string GroundSet::Format(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i : Elements(m)) {
    if (!first) out += ',';
    out += (*names_)[i];
    first = false;
  }
  return out + "}";
}

std::vector<int> Elements(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask Lift(Mask local, const std::vector<int>& positions) {
  Mask out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (local & Bit(static_cast<int>(i))) out |= Bit(positions[i]);
  }
  return out;
}

}  // namespace polybase
