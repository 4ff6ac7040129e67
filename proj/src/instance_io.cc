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

#include "polybase/instance_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "polybase/errors.h"

namespace polybase {
namespace {

using nlohmann::json;

const json& Field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return node.at(key);
}

std::int64_t Int(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

int Element(const GroundSet& ground, const json& v) {
  if (!v.is_string()) throw ParseError("element names must be strings");
  const int i = ground.IndexOf(v.get<std::string>());
  if (i < 0) throw ParseError("unknown element \"" + v.get<std::string>() + "\"");
  return i;
}

IntVector Vector(const GroundSet& ground, const json& v, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != ground.size()) {
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(ground.size()) + " integers");
  }
  IntVector out(ground.size());
  for (int i = 0; i < ground.size(); ++i) out[i] = Int(v[i], what);
  return out;
}

Mask SubsetKey(const GroundSet& ground, const std::string& key) {
  Mask m = 0;
  if (key.empty()) return m;
  std::stringstream in(key);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto begin = name.find_first_not_of(' ');
    const auto end = name.find_last_not_of(' ');
    if (begin == std::string::npos) throw ParseError("empty name in key \"" + key + "\"");
    name = name.substr(begin, end - begin + 1);
    const int i = ground.IndexOf(name);
    if (i < 0) throw ParseError("unknown element \"" + name + "\" in table key");
    if (m & Bit(i)) throw ParseError("repeated element in key \"" + key + "\"");
    m |= Bit(i);
  }
  return m;
}

SubmodularFn ParseNode(const GroundSet& ground, const json& node) {
  const json& type_field = Field(node, "type");
  if (!type_field.is_string()) throw ParseError("\"type\" must be a string");
  const std::string type = type_field.get<std::string>();

  if (type == "table") {
    const json& values = Field(node, "values");
    if (!values.is_object()) throw ParseError("table values must be an object");
    std::vector<std::int64_t> table(ground.subset_count(), 0);
    std::vector<bool> given(ground.subset_count(), false);
    for (const auto& [key, value] : values.items()) {
      const Mask m = SubsetKey(ground, key);
      if (given[m]) throw ParseError("subset \"" + key + "\" listed twice");
      given[m] = true;
      table[m] = Int(value, "table value");
    }
    for (Mask m = 1; m < given.size(); ++m) {
      if (!given[m]) {
        throw ParseError("table is missing subset " + ground.Format(m));
      }
    }
    if (table[0] != 0) throw ParseError("table value at the empty set must be 0");
    return SubmodularFn::Table(ground, std::move(table));
  }
  if (type == "uniform") {
    return SubmodularFn::UniformRank(
        ground, static_cast<int>(Int(Field(node, "rank"), "rank")));
  }
  if (type == "partition") {
    const json& blocks = Field(node, "blocks");
    const json& caps = Field(node, "caps");
    if (!blocks.is_array() || !caps.is_array()) {
      throw ParseError("partition blocks and caps must be arrays");
    }
    std::vector<Mask> masks;
    for (const auto& block : blocks) {
      if (!block.is_array()) throw ParseError("partition block must be an array");
      Mask m = 0;
      for (const auto& name : block) m |= Bit(Element(ground, name));
      masks.push_back(m);
    }
    std::vector<std::int64_t> cap_values;
    for (const auto& c : caps) cap_values.push_back(Int(c, "cap"));
    return SubmodularFn::PartitionRank(ground, std::move(masks),
                                       std::move(cap_values));
  }
  if (type == "graphic") {
    const int vertices =
        static_cast<int>(Int(Field(node, "vertices"), "vertices"));
    const json& edges = Field(node, "edges");
    if (!edges.is_array()) throw ParseError("graphic edges must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& edge : edges) {
      if (!edge.is_array() || edge.size() != 2) {
        throw ParseError("graphic edge must be [u, v]");
      }
      pairs.emplace_back(static_cast<int>(Int(edge[0], "vertex")),
                         static_cast<int>(Int(edge[1], "vertex")));
    }
    return SubmodularFn::GraphicRank(ground, vertices, std::move(pairs));
  }

  const SubmodularFn inner = ParseNode(ground, Field(node, "inner"));
  if (type == "dual") return Dual(inner);
  if (type == "shift") return Shift(inner, Vector(ground, Field(node, "a"), "a"));
  if (type == "reduce") {
    return Reduce(inner, Vector(ground, Field(node, "a"), "a"));
  }
  if (type == "reduce_at") {
    return ReduceAt(inner, Element(ground, Field(node, "e")),
                    Int(Field(node, "c"), "c"));
  }
  if (type == "scale") return Scale(Int(Field(node, "r"), "r"), inner);
  throw ParseError("unknown node type \"" + type + "\"");
}

}  // namespace

Instance ParseInstance(const nlohmann::json& doc) {
  try {
    const json& names = Field(doc, "ground");
    if (!names.is_array()) throw ParseError("\"ground\" must be an array");
    std::vector<std::string> ground_names;
    for (const auto& n : names) {
      if (!n.is_string()) throw ParseError("element names must be strings");
      ground_names.push_back(n.get<std::string>());
    }
    GroundSet ground(std::move(ground_names));
    Instance instance{ParseNode(ground, Field(doc, "f")), {}, {}};
    if (doc.contains("w")) instance.w = Vector(ground, doc.at("w"), "w");
    if (doc.contains("k")) instance.k = Int(doc.at("k"), "k");
    return instance;
  } catch (const UsageError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return ParseInstance(doc);
}

IntVector ParseIntList(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::int64_t> values;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw ParseError("not an integer list: \"" + std::string(text) + "\"");
    }
  }
  return IntVector(std::move(values));
}

nlohmann::json CertificateToJson(const WeightedDecomposition& d, int dim) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"weight", t.weight}, {"point", t.point.values()}});
  }
  return {{"k", d.k},
          {"w", d.target.values()},
          {"terms", std::move(terms)},
          {"distinct", d.distinct()},
          {"dim", dim},
          {"bound_ok", d.distinct() <= dim + 1}};
}

WeightedDecomposition CertificateFromJson(const nlohmann::json& doc) {
  try {
    WeightedDecomposition d;
    d.k = Int(Field(doc, "k"), "k");
    d.target = IntVector(Field(doc, "w").get<std::vector<std::int64_t>>());
    for (const auto& t : Field(doc, "terms")) {
      d.terms.push_back(
          {Int(Field(t, "weight"), "weight"),
           IntVector(Field(t, "point").get<std::vector<std::int64_t>>())});
    }
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid certificate: ") + e.what());
  }
}

}  // namespace polybase
