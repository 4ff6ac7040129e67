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

#include "polybase/exact_lp.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "polybase/errors.h"
#include "polybase/oracle.h"
#include "polybase/polytope.h"
#include "support/corpus.h"

namespace polybase {
namespace {

using testing::Letters;
using testing::Uniform;

// Solves A x = b for square A; nullopt when singular.
std::optional<RationalPoint> SolveSquare(std::vector<RationalPoint> a,
                                         RationalPoint b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
      b[r] -= factor * b[c];
    }
  }
  RationalPoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// All vertices of the system: feasible solutions of every n-subset of
// constraint hyperplanes with independent normals.
std::set<RationalPoint> BruteForceVertices(const ConstraintSystem& system) {
  const int n = system.ground.size();
  std::set<std::pair<Mask, Rational>> unique;
  for (const auto& c : system.inequalities) unique.insert({c.subset, c.rhs});
  for (const auto& c : system.equalities) unique.insert({c.subset, c.rhs});
  const std::vector<std::pair<Mask, Rational>> rows(unique.begin(), unique.end());
  std::set<RationalPoint> vertices;
  std::vector<int> pick(n);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == n) {
      std::vector<RationalPoint> a;
      RationalPoint b;
      for (int i : pick) {
        RationalPoint row(n, Rational(0));
        for (int e : Elements(rows[i].first)) row[e] = 1;
        a.push_back(row);
        b.push_back(rows[i].second);
      }
      auto x = SolveSquare(a, b);
      if (x && system.Satisfies(*x)) vertices.insert(*x);
      return;
    }
    for (int i = start; i < static_cast<int>(rows.size()); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return vertices;
}

TEST(BuildIntersectionSystemTest, CountsAndInfeasibility) {
  const ConstraintSystem s = BuildIntersectionSystem(Uniform(2, 1), Uniform(2, 1));
  EXPECT_EQ(s.inequalities.size(), 6u);
  EXPECT_EQ(s.equalities.size(), 2u);
  EXPECT_FALSE(s.known_infeasible);
  const ConstraintSystem bad = BuildIntersectionSystem(
      Uniform(2, 1), Shift(Uniform(2, 1), IntVector{5, 5}));
  EXPECT_TRUE(bad.known_infeasible);
  EXPECT_FALSE(FindVertex(bad).has_value());
}

TEST(BuildIntersectionSystemTest, TextDump) {
  const ConstraintSystem s = BuildIntersectionSystem(Uniform(2, 1), Uniform(2, 1));
  const std::string text = s.ToText();
  EXPECT_NE(text.find("x({a,b}) = 1"), std::string::npos);
  EXPECT_NE(text.find("x({a}) <= 1"), std::string::npos);
}

TEST(FindVertexTest, Segment) {
  const auto v = FindVertex(BuildIntersectionSystem(Uniform(2, 1), Uniform(2, 1)));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(AssertIntegral(*v), (IntVector{1, 0}));
}

TEST(FindVertexTest, Hypersimplex) {
  const auto v = FindVertex(BuildIntersectionSystem(Uniform(3, 2), Uniform(3, 2)));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(AssertIntegral(*v), (IntVector{1, 1, 0}));
}

TEST(FindVertexTest, IdpSystemContainsScaledPoint) {
  const SubmodularFn f = testing::TriangleGraphic();
  const IntVector x{2, 2, 2};
  const ConstraintSystem s =
      BuildIntersectionSystem(f, Shift(Scale(2, Dual(f)), x));
  RationalPoint third;
  for (auto v : x) third.push_back(Rational(v) / 3);
  EXPECT_TRUE(s.Satisfies(third));
  const auto v = FindVertex(s);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(s.Satisfies(*v));
}

TEST(FindVertexTest, InfeasibleWithoutEarlyDeclaration) {
  // Equal totals, disjoint polytopes: B_f = {(1,0)}, B_g = {(0,1)}.
  const GroundSet g = Letters(2);
  const SubmodularFn f = SubmodularFn::Table(g, {0, 1, 0, 1});
  const SubmodularFn h = SubmodularFn::Table(g, {0, 0, 1, 1});
  const ConstraintSystem s = BuildIntersectionSystem(f, h);
  EXPECT_FALSE(s.known_infeasible);
  EXPECT_FALSE(FindVertex(s).has_value());
}

TEST(AssertIntegralTest, Examples) {
  EXPECT_EQ(AssertIntegral({Rational(1), Rational(1), Rational(0)}),
            (IntVector{1, 1, 0}));
  const ConstraintSystem s = BuildIntersectionSystem(Uniform(2, 1), Uniform(2, 1));
  try {
    AssertIntegral({Rational(1, 2), Rational(1, 2)}, &s);
    FAIL() << "expected an invariant violation";
  } catch (const InvariantViolation& e) {
    EXPECT_NE(e.context().find("x({a,b}) = 1"), std::string::npos);
  }
}

TEST(AffineRankTest, Examples) {
  const std::vector<RationalPoint> segment{{1, 0}, {0, 1}};
  EXPECT_EQ(AffineRank(segment), 1);
  const std::vector<RationalPoint> single{{3, 4}};
  EXPECT_EQ(AffineRank(single), 0);
  std::vector<RationalPoint> vertices;
  for (const auto& x : oracle::EnumerateVertices(Uniform(4, 2)).points) {
    vertices.push_back(ToRational(x));
  }
  EXPECT_EQ(vertices.size(), 6u);
  EXPECT_EQ(AffineRank(vertices), 3);
}

class LpProperties : public ::testing::TestWithParam<int> {};

// Against brute-force vertex enumeration: same feasibility verdict, and the
// returned point is the lexicographically largest vertex.
TEST_P(LpProperties, MatchesBruteForceVertices) {
  const auto corpus = testing::MakeCorpus(500 + GetParam(), 30, 1, 4);
  std::mt19937_64 rng(GetParam());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const SubmodularFn& f = corpus[i].f;
    SubmodularFn g = f;
    if (i % 2 == 0) {
      const std::int64_t k = std::uniform_int_distribution<int>(2, 5)(rng);
      const IntVector x = testing::RandomScaledPoint(rng, f, k);
      g = Shift(Scale(k - 1, Dual(f)), x);
    } else {
      // An unrelated function with the same total, possibly disjoint.
      const SubmodularFn h = testing::RandomSubmodularTable(rng, f.size());
      IntVector a(f.size());
      a[0] = f.Total() - h.Total();
      g = Shift(h, a);
    }
    const ConstraintSystem s = BuildIntersectionSystem(f, g);
    const std::set<RationalPoint> vertices = BruteForceVertices(s);
    const auto v = FindVertex(s);
    ASSERT_EQ(v.has_value(), !vertices.empty()) << corpus[i].name;
    if (!v) continue;
    EXPECT_TRUE(s.Satisfies(*v));
    EXPECT_EQ(TightRank(s, *v), f.size());
    EXPECT_EQ(*v, *vertices.rbegin()) << corpus[i].name;
    EXPECT_NO_THROW(AssertIntegral(*v, &s));
    EXPECT_EQ(FindVertex(s), v);
  }
}

TEST_P(LpProperties, VertexPropertyOnLargerInstances) {
  const auto corpus = testing::MakeCorpus(600 + GetParam(), 20, 5, 8);
  std::mt19937_64 rng(GetParam());
  for (const auto& entry : corpus) {
    const std::int64_t k = std::uniform_int_distribution<int>(2, 10)(rng);
    const IntVector x = testing::RandomScaledPoint(rng, entry.f, k);
    const ConstraintSystem s =
        BuildIntersectionSystem(entry.f, Shift(Scale(k - 1, Dual(entry.f)), x));
    const auto v = FindVertex(s);
    ASSERT_TRUE(v.has_value()) << entry.name;
    EXPECT_TRUE(s.Satisfies(*v));
    EXPECT_EQ(TightRank(s, *v), entry.f.size());
    EXPECT_TRUE(InBasePolytope(entry.f, AssertIntegral(*v, &s)));
  }
}

// The greedy vertices over all orders are exactly the vertices of B_f.
TEST_P(LpProperties, GreedyVerticesAreAllVertices) {
  for (const auto& entry : testing::MakeCorpus(800 + GetParam(), 20, 1, 4)) {
    const std::set<RationalPoint> vertices =
        BruteForceVertices(BuildIntersectionSystem(entry.f, entry.f));
    std::set<RationalPoint> greedy;
    for (const auto& x : oracle::EnumerateVertices(entry.f).points) {
      greedy.insert(ToRational(x));
    }
    EXPECT_EQ(greedy, vertices) << entry.name;
    const std::vector<RationalPoint> list(vertices.begin(), vertices.end());
    EXPECT_EQ(AffineRank(list), Dimension(entry.f)) << entry.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LpProperties, ::testing::Range(0, 3));

}  // namespace
}  // namespace polybase
