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

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "polybase/decomposition.h"
#include "polybase/errors.h"
#include "polybase/polytope.h"
#include "support/corpus.h"

namespace polybase {
namespace {

using nlohmann::json;

SubmodularFn Parse(const char* text) { return ParseInstance(json::parse(text)).f; }

TEST(ParseInstanceTest, Table) {
  const SubmodularFn f = Parse(R"({"ground": ["a", "b"],
      "f": {"type": "table", "values": {"a": 1, "b": 2, "b,a": 2}}})");
  EXPECT_EQ(f.Values(), (std::vector<std::int64_t>{0, 1, 2, 2}));
}

TEST(ParseInstanceTest, TableEmptySetMayBeGiven) {
  const SubmodularFn f = Parse(R"({"ground": ["a"],
      "f": {"type": "table", "values": {"": 0, "a": 5}}})");
  EXPECT_EQ(f.Total(), 5);
}

TEST(ParseInstanceTest, TableMissingKeyIsParseError) {
  EXPECT_THROW(Parse(R"({"ground": ["a", "b"],
      "f": {"type": "table", "values": {"a": 1, "b": 1}}})"),
               ParseError);
}

TEST(ParseInstanceTest, TableNonzeroEmptySetIsParseError) {
  EXPECT_THROW(Parse(R"({"ground": ["a"],
      "f": {"type": "table", "values": {"": 1, "a": 1}}})"),
               ParseError);
}

TEST(ParseInstanceTest, UniformPartitionGraphic) {
  const SubmodularFn u = Parse(R"({"ground": ["a", "b", "c"],
      "f": {"type": "uniform", "rank": 2}})");
  EXPECT_EQ(u.Values(), (std::vector<std::int64_t>{0, 1, 1, 2, 1, 2, 2, 2}));

  const SubmodularFn p = Parse(R"({"ground": ["a", "b", "c"],
      "f": {"type": "partition", "blocks": [["a", "b"], ["c"]], "caps": [1, 1]}})");
  EXPECT_EQ(p.Values(), (std::vector<std::int64_t>{0, 1, 1, 1, 1, 2, 2, 2}));

  const SubmodularFn g = Parse(R"({"ground": ["a", "b", "c"],
      "f": {"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}})");
  EXPECT_EQ(g.Values(), testing::TriangleGraphic().Values());
}

TEST(ParseInstanceTest, Wrappers) {
  const char* u23 = R"({"type": "uniform", "rank": 2})";
  auto wrap = [&](const std::string& node) {
    return Parse(("{\"ground\": [\"a\", \"b\", \"c\"], \"f\": " + node + "}").c_str());
  };
  const SubmodularFn u = testing::Uniform(3, 2);
  EXPECT_EQ(wrap(std::string(R"({"type": "dual", "inner": )") + u23 + "}").Values(),
            Dual(u).Values());
  EXPECT_EQ(wrap(std::string(R"({"type": "shift", "a": [1, 0, -1], "inner": )") +
                 u23 + "}").Values(),
            Shift(u, IntVector({1, 0, -1})).Values());
  EXPECT_EQ(wrap(std::string(R"({"type": "reduce", "a": [0, 1, 1], "inner": )") +
                 u23 + "}").Values(),
            Reduce(u, IntVector({0, 1, 1})).Values());
  EXPECT_EQ(wrap(std::string(R"({"type": "reduce_at", "e": "b", "c": 0, "inner": )") +
                 u23 + "}").Values(),
            ReduceAt(u, 1, 0).Values());
  EXPECT_EQ(wrap(std::string(R"({"type": "scale", "r": 3, "inner": )") + u23 + "}")
                .Values(),
            Scale(3, u).Values());
}

TEST(ParseInstanceTest, WAndK) {
  const Instance instance = ParseInstance(json::parse(R"({"ground": ["a", "b"],
      "f": {"type": "uniform", "rank": 1}, "w": [1, 1], "k": 2})"));
  ASSERT_TRUE(instance.w.has_value());
  EXPECT_EQ(*instance.w, IntVector({1, 1}));
  EXPECT_EQ(instance.k, 2);
}

TEST(ParseInstanceTest, Errors) {
  // Unknown element names, duplicate names, bad types, length mismatches.
  EXPECT_THROW(Parse(R"({"ground": ["a", "b"],
      "f": {"type": "table", "values": {"a": 1, "z": 1, "a,b": 1}}})"),
               ParseError);
  EXPECT_THROW(Parse(R"({"ground": ["a", "a"], "f": {"type": "uniform", "rank": 1}})"),
               ParseError);
  EXPECT_THROW(Parse(R"({"ground": ["a"], "f": {"type": "matroid"}})"), ParseError);
  EXPECT_THROW(Parse(R"({"ground": ["a", "b"],
      "f": {"type": "shift", "a": [1], "inner": {"type": "uniform", "rank": 1}}})"),
               ParseError);
  EXPECT_THROW(Parse(R"({"ground": ["a"],
      "f": {"type": "reduce_at", "e": "q", "c": 0, "inner": {"type": "uniform", "rank": 1}}})"),
               ParseError);
  EXPECT_THROW(Parse(R"({"ground": ["a"], "f": {"type": "uniform", "rank": "two"}})"),
               ParseError);
  EXPECT_THROW(ParseInstance(json::parse(R"({"ground": ["a", "b"],
      "f": {"type": "uniform", "rank": 1}, "w": [1]})")),
               ParseError);
}

TEST(ParseInstanceTest, LoadInstanceReportsBadFiles) {
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), Error);
  const auto path = std::filesystem::temp_directory_path() / "polybase_bad.json";
  std::ofstream(path) << "{\"ground\": [";
  EXPECT_THROW(LoadInstance(path), ParseError);
  std::filesystem::remove(path);
}

TEST(ParseIntListTest, Examples) {
  EXPECT_EQ(ParseIntList("2,2,2"), IntVector({2, 2, 2}));
  EXPECT_EQ(ParseIntList("[1, -3]"), IntVector({1, -3}));
  EXPECT_EQ(ParseIntList("7"), IntVector({7}));
  EXPECT_THROW(ParseIntList("1,,2"), Error);
  EXPECT_THROW(ParseIntList("x"), Error);
}

TEST(CertificateTest, KeysAndOrder) {
  const SubmodularFn k3 = testing::TriangleGraphic();
  const DecompositionResult r = Decompose(k3, IntVector({2, 2, 2}), 3);
  const json doc = CertificateToJson(r.decomposition, Dimension(k3));
  EXPECT_EQ(doc.dump(),
            R"({"bound_ok":true,"dim":2,"distinct":3,"k":3,"terms":[)"
            R"({"point":[0,1,1],"weight":1},{"point":[1,0,1],"weight":1},)"
            R"({"point":[1,1,0],"weight":1}],"w":[2,2,2]})");
}

TEST(CertificateTest, RoundTripThroughVerifier) {
  for (const auto& entry : testing::MakeCorpus(11, 20, 2, 6)) {
    std::mt19937_64 rng(entry.f.size());
    const IntVector w = testing::RandomScaledPoint(rng, entry.f, 4);
    const DecompositionResult r = Decompose(entry.f, w, 4);
    const json doc = CertificateToJson(r.decomposition, Dimension(entry.f));
    const WeightedDecomposition back = CertificateFromJson(json::parse(doc.dump()));
    EXPECT_TRUE(Verify(entry.f, back).ok) << entry.name;
    EXPECT_EQ(CertificateToJson(back, Dimension(entry.f)), doc) << entry.name;
  }
}

}  // namespace
}  // namespace polybase
