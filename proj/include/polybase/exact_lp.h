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

#ifndef POLYBASE_EXACT_LP_H_
#define POLYBASE_EXACT_LP_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polybase/ground_set.h"
#include "polybase/int_vector.h"
#include "polybase/submodular.h"

namespace polybase {

// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;

// x(subset) <= rhs, or x(subset) = rhs for equalities.
struct SubsetConstraint {
  Mask subset = 0;
  Rational rhs;
};

// Explicit inequality description over a ground set. Every coefficient
// vector is the 0/1 incidence vector of a subset.
struct ConstraintSystem {
  GroundSet ground;
  std::vector<SubsetConstraint> inequalities;
  std::vector<SubsetConstraint> equalities;
  // Set when the builder already knows the system is empty.
  bool known_infeasible = false;
  std::string infeasibility_reason;

  // One constraint per line: "x({a,b}) <= 3".
  std::string ToText() const;
  bool Satisfies(const RationalPoint& x) const;
};

// Constraints of B_f and B_g: x(U) <= f(U), x(U) <= g(U) for all nonempty U,
// and x(E) = f(E), x(E) = g(E). Declared infeasible when f(E) != g(E).
ConstraintSystem BuildIntersectionSystem(const SubmodularFn& f,
                                         const SubmodularFn& g);

struct LpStats {
  std::int64_t solves = 0;
  std::int64_t pivots = 0;
  // Vertices returned by FindVertex, and those with a non-integer coordinate.
  std::int64_t vertices = 0;
  std::int64_t fractional_vertices = 0;
  // Vertices converted by callers through AssertIntegral.
  std::int64_t integral_vertices = 0;
};

struct LpOptions {
  // When set, every system is dumped here before it is solved.
  std::ostream* dump = nullptr;
  LpStats* stats = nullptr;
};

// The lexicographically largest feasible point (maximize x(e_1), then x(e_2)
// subject to that, ...). It is always a vertex. nullopt means the system is
// infeasible (or unbounded, which cannot happen for base-polytope systems).
std::optional<RationalPoint> FindVertex(const ConstraintSystem& system,
                                        const LpOptions& options = {});

// Converts a vertex of a two-base-polytope system to integers. A fractional
// coordinate contradicts the integrality of polymatroid intersections and
// throws InvariantViolation carrying the system dump.
IntVector AssertIntegral(const RationalPoint& p,
                         const ConstraintSystem* system = nullptr);

// Dimension of the affine hull (rank of the differences to the first point).
int AffineRank(std::span<const RationalPoint> points);

// Rank of the incidence vectors of the constraints tight at x.
int TightRank(const ConstraintSystem& system, const RationalPoint& x);

RationalPoint ToRational(const IntVector& x);
std::string ToString(const RationalPoint& p);

}  // namespace polybase

#endif  // POLYBASE_EXACT_LP_H_
