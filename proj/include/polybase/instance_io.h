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

#ifndef POLYBASE_INSTANCE_IO_H_
#define POLYBASE_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "polybase/decomposition.h"
#include "polybase/int_vector.h"
#include "polybase/submodular.h"

namespace polybase {

// {"ground": [names...], "f": <node>, "w": [ints]?, "k": int?}
//
// <node> is one of
//   {"type": "table", "values": {"a,b": 1, ...}}   (key "" is the empty set)
//   {"type": "uniform", "rank": r}
//   {"type": "partition", "blocks": [[names]...], "caps": [ints]}
//   {"type": "graphic", "vertices": m, "edges": [[u, v]...]}
//   {"type": "dual", "inner": <node>}
//   {"type": "shift" | "reduce", "a": [ints], "inner": <node>}
//   {"type": "reduce_at", "e": name, "c": int, "inner": <node>}
//   {"type": "scale", "r": int, "inner": <node>}
struct Instance {
  SubmodularFn f;
  std::optional<IntVector> w;
  std::optional<std::int64_t> k;
};

// Throws ParseError on malformed or inconsistent input.
Instance ParseInstance(const nlohmann::json& doc);
Instance LoadInstance(const std::filesystem::path& path);

// Parses "2,2,2" (or "[2,2,2]").
IntVector ParseIntList(std::string_view text);

// {"bound_ok", "dim", "distinct", "k", "terms": [{"point", "weight"}], "w"}
// with terms in the order given (callers canonicalize first).
nlohmann::json CertificateToJson(const WeightedDecomposition& d, int dim);
WeightedDecomposition CertificateFromJson(const nlohmann::json& doc);

}  // namespace polybase

#endif  // POLYBASE_INSTANCE_IO_H_
