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

#include "polybase/decomposition.h"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "polybase/errors.h"
#include "polybase/polytope.h"

namespace polybase {
namespace {

// Sums weights of equal points, keeping first-occurrence order.
void MergeDuplicates(WeightedDecomposition& d) {
  std::vector<Term> merged;
  std::map<IntVector, std::size_t> index;
  for (auto& term : d.terms) {
    auto [it, inserted] = index.emplace(term.point, merged.size());
    if (inserted) {
      merged.push_back(std::move(term));
    } else {
      merged[it->second].weight += term.weight;
    }
  }
  d.terms = std::move(merged);
}

void Require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

class Decomposer {
 public:
  explicit Decomposer(const DecomposeOptions& options) : options_(options) {}

  // `bound` is the recursion measure dim + |E| of the caller; every call must
  // be strictly below it.
  WeightedDecomposition Run(const SubmodularFn& f, const IntVector& w,
                            std::int64_t k, int bound, TraceNode& node) {
    const int n = f.size();
    node.function = f.Describe();
    node.w = w;
    node.k = k;
    if (n == 1) {
      Require(1 < bound, "recursion measure did not decrease");
      node.kind = "base";
      Require(w[0] == k * f.Total(), "one-element block off its base value");
      return {{{k, IntVector{f.Total()}}}, w, k};
    }
    if (k == 1) {
      node.kind = "single";
      return {{{1, w}}, w, 1};
    }
    const int dim = Dimension(f);
    const int measure = dim + n;
    Require(measure < bound, "recursion measure did not decrease");

    if (dim < n - 1) {
      node.kind = "direct_sum";
      return DecomposeFace(FaceStructureOf(f), w, k, measure, node);
    }

    const int e = 0;
    const std::int64_t q = FloorDiv(w[e], k);
    const std::int64_t r = w[e] - k * q;
    node.element = f.ground().name(e);
    node.q = q;
    node.r = r;

    if (r == 0) {
      // w / k lies in the face {x in B_{f|(e,q)} : x(e) = q}; {e} is tight
      // there, so the face has at least two blocks.
      node.kind = "face_drop";
      const SubmodularFn lower = ReduceAt(f, e, q);
      FaceStructure face = MinimalFace(lower, w, k);
      Require(face.chain.size() >= 3, "face with x(e) = q is not proper");
      return DecomposeFace(face, w, k, measure, node);
    }

    node.kind = "main_split";
    const SubmodularFn upper = ReduceAt(f, e, q + 1);
    const SubmodularFn lower = ReduceAt(f, e, q);
    const SubmodularFn first = Scale(r, upper);
    const SubmodularFn second = Shift(Scale(k - r, Dual(lower)), w);
    node.intersection = {first.Describe(), second.Describe()};
    const ConstraintSystem system = BuildIntersectionSystem(first, second);
    const std::optional<RationalPoint> vertex =
        FindVertex(system, options_.lp);
    if (!vertex) {
      throw InvariantViolation("polymatroid intersection P is empty",
                               system.ToText());
    }
    const IntVector x1 = AssertIntegral(*vertex, &system);
    if (options_.lp.stats != nullptr) ++options_.lp.stats->integral_vertices;
    const IntVector x2 = w - x1;
    node.x_prime = x1;
    node.x_double_prime = x2;
    Require(x1[e] == r * (q + 1), "x'(e) != r(q+1)");
    Require(x2[e] == (k - r) * q, "x''(e) != (k-r)q");

    TraceNode& left = node.children.emplace_back();
    left.kind = "face";
    WeightedDecomposition d1 =
        DecomposeFace(MinimalFace(upper, x1, r), x1, r, measure, left);
    TraceNode& right = node.children.emplace_back();
    right.kind = "face";
    WeightedDecomposition d2 = DecomposeFace(MinimalFace(lower, x2, k - r), x2,
                                             k - r, measure, right);

    WeightedDecomposition out{std::move(d1.terms), w, k};
    for (auto& t : d2.terms) out.terms.push_back(std::move(t));
    MergeDuplicates(out);
    return out;
  }

 private:
  WeightedDecomposition DecomposeFace(const FaceStructure& face,
                                      const IntVector& w, std::int64_t k,
                                      int bound, TraceNode& node) {
    node.blocks = face.blocks;
    std::vector<WeightedDecomposition> parts;
    for (std::size_t i = 0; i < face.blocks.size(); ++i) {
      TraceNode& child = node.children.emplace_back();
      parts.push_back(Run(face.block_fns[i], w.Restrict(face.blocks[i]), k,
                          bound, child));
    }
    return MergeDirectSum(parts, face.blocks, w.size());
  }

  const DecomposeOptions& options_;
};

}  // namespace

void Canonicalize(WeightedDecomposition& d) {
  MergeDuplicates(d);
  std::sort(d.terms.begin(), d.terms.end(),
            [](const Term& a, const Term& b) { return a.point < b.point; });
}

nlohmann::json TraceToJson(const TraceNode& node) {
  nlohmann::json j;
  j["case"] = node.kind;
  j["f"] = node.function;
  j["w"] = node.w.values();
  j["k"] = node.k;
  if (node.element) {
    j["e"] = *node.element;
    j["q"] = node.q;
    j["r"] = node.r;
  }
  if (!node.intersection.empty()) j["p"] = node.intersection;
  if (node.x_prime) j["x_prime"] = node.x_prime->values();
  if (node.x_double_prime) j["x_double_prime"] = node.x_double_prime->values();
  if (!node.blocks.empty()) j["blocks"] = node.blocks;
  if (!node.children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(TraceToJson(c));
  }
  return j;
}

std::vector<IntVector> SplitIntoKBases(const SubmodularFn& f,
                                       const IntVector& x, std::int64_t k,
                                       const LpOptions& options) {
  if (k < 1) throw UsageError("k must be a positive integer");
  const Membership m = InBasePolytope(Scale(k, f), x);
  if (!m) {
    throw UsageError("x = " + x.ToString() + " is not in " +
                     std::to_string(k) + " B_f: violated at " +
                     f.ground().Format(*m.violated));
  }
  std::vector<IntVector> bases;
  IntVector rest = x;
  const SubmodularFn dual = Dual(f);
  for (std::int64_t left = k; left > 1; --left) {
    const SubmodularFn complement = Shift(Scale(left - 1, dual), rest);
    const ConstraintSystem system = BuildIntersectionSystem(f, complement);
    const std::optional<RationalPoint> vertex = FindVertex(system, options);
    if (!vertex) {
      throw InvariantViolation("B_f meets no base of rest - (k-1) B_f",
                               system.ToText());
    }
    IntVector base = AssertIntegral(*vertex, &system);
    if (options.stats != nullptr) ++options.stats->integral_vertices;
    rest -= base;
    bases.push_back(std::move(base));
  }
  bases.push_back(rest);
  return bases;
}

WeightedDecomposition MergeDirectSum(
    std::span<const WeightedDecomposition> parts, std::span<const Mask> blocks,
    int n) {
  if (parts.empty() || parts.size() != blocks.size()) {
    throw UsageError("merge needs one block mask per part");
  }
  const std::int64_t k = parts.front().k;
  std::set<std::int64_t> breakpoints;
  for (const auto& part : parts) {
    if (part.k != k) throw UsageError("merged parts have different k");
    std::int64_t cumulative = 0;
    for (const auto& t : part.terms) {
      if (t.weight <= 0) throw UsageError("merge: nonpositive weight");
      cumulative += t.weight;
      breakpoints.insert(cumulative);
    }
    if (cumulative != k) throw UsageError("merge: part weights do not sum to k");
  }

  WeightedDecomposition out{{}, IntVector(n), k};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::vector<int> positions = Elements(blocks[p]);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      out.target[positions[i]] = parts[p].target[static_cast<int>(i)];
    }
  }

  // Walk the breakpoints l_1 < ... < l_q = k; on (l_{i-1}, l_i] each part
  // contributes the term whose cumulative interval contains l_i.
  std::vector<std::size_t> active(parts.size(), 0);
  std::vector<std::int64_t> reach(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    reach[p] = parts[p].terms.front().weight;
  }
  std::int64_t previous = 0;
  for (std::int64_t l : breakpoints) {
    IntVector point(n);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      while (reach[p] < l) reach[p] += parts[p].terms[++active[p]].weight;
      const IntVector& local = parts[p].terms[active[p]].point;
      const std::vector<int> positions = Elements(blocks[p]);
      for (std::size_t i = 0; i < positions.size(); ++i) {
        point[positions[i]] = local[static_cast<int>(i)];
      }
    }
    out.terms.push_back({l - previous, std::move(point)});
    previous = l;
  }
  MergeDuplicates(out);
  return out;
}

DecompositionResult Decompose(const SubmodularFn& f, const IntVector& w,
                              std::int64_t k, const DecomposeOptions& options) {
  if (k < 1) throw UsageError("k must be a positive integer");
  if (w.size() != f.size()) {
    throw UsageError("w has " + std::to_string(w.size()) +
                     " entries, ground set has " + std::to_string(f.size()));
  }
  const SubmodularityReport report = IsSubmodular(f);
  if (!report.submodular) {
    throw UsageError("function is not submodular: violated by A = " +
                     f.ground().Format(report.violation->first) + ", B = " +
                     f.ground().Format(report.violation->second));
  }
  const Membership m = InBasePolytope(Scale(k, f), w);
  if (!m) {
    const Mask u = *m.violated;
    throw UsageError("w = " + w.ToString() + " is not in " +
                     std::to_string(k) + " B_f: w(" + f.ground().Format(u) +
                     ") = " + std::to_string(w.Sum(u)) + " against " +
                     std::to_string(k) + " f(" + f.ground().Format(u) +
                     ") = " + std::to_string(k * f.Eval(u)) +
                     (u == f.ground().full() ? " (must be equal)" : ""));
  }

  DecompositionResult result;
  Decomposer decomposer(options);
  try {
    result.decomposition = decomposer.Run(f, w, k, INT_MAX, result.trace);
  } catch (const InvariantViolation& e) {
    std::string context = e.context();
    if (!context.empty()) context += "\n";
    context += "partial trace:\n" + TraceToJson(result.trace).dump(2);
    throw InvariantViolation(e.what(), context);
  }
  Canonicalize(result.decomposition);
  return result;
}

Verification Verify(const SubmodularFn& f, const WeightedDecomposition& d) {
  Verification v;
  auto fail = [&v](std::string message) {
    v.ok = false;
    v.failures.push_back(std::move(message));
  };
  const int n = f.size();
  if (d.k < 1) fail("k must be positive");
  if (d.target.size() != n) {
    fail("target has wrong length");
    return v;
  }
  if (d.terms.empty()) fail("no terms");

  std::int64_t weight_sum = 0;
  IntVector sum(n);
  std::set<IntVector> seen;
  bool shapes_ok = true;
  for (const auto& t : d.terms) {
    if (t.weight <= 0) fail("nonpositive weight " + std::to_string(t.weight));
    if (t.point.size() != n) {
      fail("point " + t.point.ToString() + " has wrong length");
      shapes_ok = false;
      continue;
    }
    if (!seen.insert(t.point).second) {
      fail("duplicate point " + t.point.ToString());
    }
    weight_sum += t.weight;
    sum += t.weight * t.point;
  }
  if (!shapes_ok) return v;
  if (weight_sum != d.k) {
    fail("weight sum mismatch: weights sum to " + std::to_string(weight_sum) +
         ", k = " + std::to_string(d.k));
  }
  if (sum != d.target) {
    fail("sum mismatch: weighted sum " + sum.ToString() + " != w " +
         d.target.ToString());
  }

  const SubmodularityReport report = IsSubmodular(f);
  if (!report.submodular) {
    fail("function is not submodular");
    return v;
  }
  for (const auto& t : d.terms) {
    const Membership m = InBasePolytope(f, t.point);
    if (!m) {
      fail("point " + t.point.ToString() + " is not a base: violated at " +
           f.ground().Format(*m.violated));
    }
  }
  const int dim = Dimension(f);
  if (d.distinct() > dim + 1) {
    fail("cardinality bound exceeded: " + std::to_string(d.distinct()) +
         " distinct points > dim B_f + 1 = " + std::to_string(dim + 1));
  }
  return v;
}

}  // namespace polybase
