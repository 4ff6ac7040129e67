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

#include <random>

#include "gtest/gtest.h"
#include "polybase/errors.h"
#include "polybase/oracle.h"
#include "support/corpus.h"

namespace polybase {
namespace {

using testing::Letters;
using testing::MaskOf;
using testing::TriangleGraphic;
using testing::Uniform;

// Reduction by brute force, straight from the min over T subset of U.
std::int64_t ReduceByHand(const SubmodularFn& f, const IntVector& a, Mask u) {
  std::int64_t best = INT64_MAX;
  for (Mask t = 0; t <= u; ++t) {
    if (!IsSubset(t, u)) continue;
    best = std::min(best, f.Eval(t) + a.Sum(u & ~t));
  }
  return best;
}

TEST(SubmodularFnTest, UniformRank) {
  const SubmodularFn f = Uniform(2, 1);
  EXPECT_EQ(f.Eval(0b11), 1);
  EXPECT_EQ(f.Eval(0b01), 1);
  EXPECT_EQ(f.Eval(0), 0);
}

TEST(SubmodularFnTest, DualOfUniform) {
  const SubmodularFn f = Uniform(2, 1);
  // f({b}) - f(E) = 1 - 1.
  EXPECT_EQ(Dual(f).Eval(MaskOf(f.ground(), {"a"})), 0);
  EXPECT_EQ(Dual(f).Eval(0b11), -1);
}

TEST(SubmodularFnTest, ReduceMatchesExhaustiveMinimum) {
  const SubmodularFn f = Uniform(3, 2);
  const IntVector a{0, 1, 1};
  const SubmodularFn g = Reduce(f, a);
  EXPECT_EQ(ReduceByHand(f, a, 0b111), 2);
  EXPECT_EQ(g.Eval(0b111), 2);
  for (Mask u = 0; u < 8; ++u) EXPECT_EQ(g.Eval(u), ReduceByHand(f, a, u)) << u;
}

TEST(SubmodularFnTest, ShiftAndScale) {
  const SubmodularFn f = TriangleGraphic();
  const IntVector a{3, -1, 2};
  const SubmodularFn shifted = Shift(f, a);
  const SubmodularFn scaled = Scale(3, f);
  for (Mask u = 0; u < 8; ++u) {
    EXPECT_EQ(shifted.Eval(u), f.Eval(u) + a.Sum(u));
    EXPECT_EQ(scaled.Eval(u), 3 * f.Eval(u));
  }
}

TEST(SubmodularFnTest, ReduceAtUsesSingletonValuesOffTheFixedElement) {
  const SubmodularFn f = Uniform(3, 2);
  const SubmodularFn g = ReduceAt(f, 0, 0);
  // a = (0, 1, 1): identical to the explicit reduction above.
  const SubmodularFn h = Reduce(f, IntVector{0, 1, 1});
  for (Mask u = 0; u < 8; ++u) EXPECT_EQ(g.Eval(u), h.Eval(u));
  // Bases avoiding a: only {b, c}.
  const oracle::PointSet bases = oracle::EnumerateBasePoints(g);
  ASSERT_EQ(bases.points.size(), 1u);
  EXPECT_EQ(bases.points[0], (IntVector{0, 1, 1}));
}

TEST(SubmodularFnTest, BlockRestrict) {
  const GroundSet g = Letters(4);
  const SubmodularFn f = SubmodularFn::PartitionRank(
      g, {MaskOf(g, {"a", "b"}), MaskOf(g, {"c", "d"})}, {1, 1});
  const SubmodularFn block =
      BlockRestrict(f, MaskOf(g, {"a", "b"}), MaskOf(g, {"c", "d"}));
  EXPECT_EQ(block.size(), 2);
  EXPECT_EQ(block.ground().name(0), "c");
  const SubmodularFn u12 = Uniform(2, 1);
  for (Mask u = 0; u < 4; ++u) EXPECT_EQ(block.Eval(u), u12.Eval(u));
}

TEST(SubmodularFnTest, OutOfRangeMaskIsUsageError) {
  EXPECT_THROW(Uniform(2, 1).Eval(0b100), UsageError);
  EXPECT_THROW(Scale(0, Uniform(2, 1)), UsageError);
  EXPECT_THROW(Shift(Uniform(2, 1), IntVector{1}), UsageError);
  EXPECT_THROW(SubmodularFn::Table(Letters(1), {1, 1}), UsageError);
}

TEST(SubmodularFnTest, GroundSetLimit) {
  const int saved = GroundSetLimit();
  SetGroundSetLimit(3);
  EXPECT_THROW(Letters(4), UsageError);
  SetGroundSetLimit(saved);
  EXPECT_NO_THROW(Letters(4));
  EXPECT_THROW(GroundSet({"a", "a"}), UsageError);
}

TEST(IsSubmodularTest, Examples) {
  EXPECT_TRUE(IsSubmodular(Uniform(4, 2)).submodular);
  const SubmodularFn bad = SubmodularFn::Table(Letters(2), {0, 0, 0, 1});
  const SubmodularityReport report = IsSubmodular(bad);
  EXPECT_FALSE(report.submodular);
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_EQ(report.violation->first, 0b01u);
  EXPECT_EQ(report.violation->second, 0b10u);
}

TEST(IsMatroidRankTest, Examples) {
  EXPECT_TRUE(IsMatroidRank(TriangleGraphic()));
  EXPECT_FALSE(IsMatroidRank(Scale(2, Uniform(2, 1))));
  EXPECT_FALSE(IsMatroidRank(Dual(Uniform(2, 1))));
}

// Properties over a random corpus.
class CorpusProperties : public ::testing::TestWithParam<int> {};

TEST_P(CorpusProperties, ConstructionsStaySubmodular) {
  const auto corpus = testing::MakeCorpus(1000 + GetParam(), 20, 1, 6);
  std::mt19937_64 rng(GetParam());
  for (const auto& entry : corpus) {
    const SubmodularFn& f = entry.f;
    ASSERT_TRUE(IsSubmodular(f).submodular) << entry.name;
    const SubmodularFn dual = Dual(f);
    EXPECT_TRUE(IsSubmodular(dual).submodular) << entry.name;
    const SubmodularFn twice = Dual(dual);
    for (Mask u = 0; u < f.ground().subset_count(); ++u) {
      ASSERT_EQ(twice.Eval(u), f.Eval(u)) << entry.name;
      ASSERT_EQ(Scale(4, f).Eval(u), 4 * f.Eval(u));
    }
    IntVector a(f.size());
    for (int e = 0; e < f.size(); ++e) {
      a[e] = std::uniform_int_distribution<int>(-1, 2)(rng);
    }
    EXPECT_TRUE(IsSubmodular(Shift(f, a)).submodular) << entry.name;
    EXPECT_TRUE(IsSubmodular(Reduce(f, a)).submodular) << entry.name;
    const SubmodularFn reduced = Reduce(Dual(f), a);
    EXPECT_EQ(reduced.Materialize().Values(), reduced.Values());
  }
}

// EP_{f|a} = {x in EP_f : x <= a}, compared on all integer points of a box.
TEST_P(CorpusProperties, ReductionCutsTheExtendedPolymatroid) {
  const auto corpus = testing::MakeCorpus(2000 + GetParam(), 15, 1, 4);
  std::mt19937_64 rng(7 + GetParam());
  for (const auto& entry : corpus) {
    const SubmodularFn& f = entry.f;
    const int n = f.size();
    IntVector a(n);
    for (int e = 0; e < n; ++e) {
      a[e] = std::uniform_int_distribution<int>(-1, 2)(rng);
    }
    const SubmodularFn reduced = Reduce(f, a);
    auto in_ep = [](const SubmodularFn& g, const IntVector& x) {
      for (Mask u = 1; u < g.ground().subset_count(); ++u) {
        if (x.Sum(u) > g.Eval(u)) return false;
      }
      return true;
    };
    IntVector x(n, -3);
    while (true) {
      bool below_a = true;
      for (int e = 0; e < n; ++e) below_a = below_a && x[e] <= a[e];
      ASSERT_EQ(in_ep(reduced, x), below_a && in_ep(f, x))
          << entry.name << " at " << x.ToString();
      int e = 0;
      while (e < n && x[e] == 3) x[e++] = -3;
      if (e == n) break;
      ++x[e];
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CorpusProperties, ::testing::Range(0, 3));

}  // namespace
}  // namespace polybase
