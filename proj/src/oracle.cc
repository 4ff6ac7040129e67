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

#include "polybase/oracle.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "polybase/errors.h"

namespace polybase::oracle {
namespace {

// Direct transcription of x(U) <= k f(U) for all U and x(E) = k f(E).
bool InScaledBase(const SubmodularFn& f, const IntVector& x, std::int64_t k) {
  const Mask full = f.ground().full();
  if (x.Total() != k * f.Eval(full)) return false;
  for (Mask u = 1; u < full; ++u) {
    if (x.Sum(u) > k * f.Eval(u)) return false;
  }
  return true;
}

PointSet ScanBox(const SubmodularFn& f, std::int64_t k, const Budget& budget,
                 std::string provenance) {
  const int n = f.size();
  const Mask full = f.ground().full();
  IntVector lo(n), hi(n);
  long double volume = 1;
  for (int e = 0; e < n; ++e) {
    lo[e] = k * (f.Eval(full) - f.Eval(full & ~Bit(e)));
    hi[e] = k * f.Eval(Bit(e));
    if (hi[e] < lo[e]) return {{}, std::move(provenance)};
    volume *= static_cast<long double>(hi[e] - lo[e] + 1);
  }
  if (volume > static_cast<long double>(budget.box_points)) {
    throw BudgetExceeded("bounding box holds more than " +
                         std::to_string(budget.box_points) + " points");
  }
  PointSet out{{}, std::move(provenance)};
  const std::int64_t total = k * f.Eval(full);
  // Odometer over the first n - 1 coordinates; x(E) fixes the last one.
  IntVector x = lo;
  while (true) {
    std::int64_t partial = 0;
    for (int e = 0; e + 1 < n; ++e) partial += x[e];
    x[n - 1] = total - partial;
    if (x[n - 1] >= lo[n - 1] && x[n - 1] <= hi[n - 1] &&
        InScaledBase(f, x, k)) {
      out.points.push_back(x);
    }
    int e = n - 2;
    while (e >= 0 && x[e] == hi[e]) {
      x[e] = lo[e];
      --e;
    }
    if (e < 0) break;
    ++x[e];
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

class Search {
 public:
  Search(const std::vector<IntVector>& points, const IntVector& lo,
         const IntVector& hi)
      : points_(points), lo_(lo), hi_(hi) {}

  // Is there a combination using exactly `slots` distinct points?
  bool Exists(int slots, std::int64_t k, const IntVector& w) {
    return Dfs(0, slots, k, w);
  }

 private:
  bool Dfs(std::size_t start, int slots, std::int64_t k,
           const IntVector& residual) {
    if (slots == 0) {
      return k == 0 && std::all_of(residual.begin(), residual.end(),
                                   [](std::int64_t v) { return v == 0; });
    }
    for (std::size_t i = start; i + slots <= points_.size(); ++i) {
      const std::int64_t max_weight = k - (slots - 1);
      for (std::int64_t weight = slots == 1 ? k : 1; weight <= max_weight;
           ++weight) {
        IntVector next = residual - weight * points_[i];
        if (!Reachable(next, k - weight)) continue;
        if (Dfs(i + 1, slots - 1, k - weight, next)) return true;
      }
    }
    return false;
  }

  // Each remaining unit of weight adds a point inside [lo, hi].
  bool Reachable(const IntVector& residual, std::int64_t k) const {
    for (int e = 0; e < residual.size(); ++e) {
      if (residual[e] < k * lo_[e] || residual[e] > k * hi_[e]) return false;
    }
    return true;
  }

  const std::vector<IntVector>& points_;
  const IntVector& lo_;
  const IntVector& hi_;
};

}  // namespace

PointSet EnumerateBasePoints(const SubmodularFn& f, const Budget& budget) {
  return ScanBox(f, 1, budget, "bounding-box scan");
}

PointSet EnumerateScaledBasePoints(const SubmodularFn& f, std::int64_t k,
                                   const Budget& budget) {
  if (k < 1) throw UsageError("k must be positive");
  return ScanBox(f, k, budget, "scaled bounding-box scan");
}

PointSet EnumerateVertices(const SubmodularFn& f, const Budget& budget) {
  const int n = f.size();
  if (n > budget.max_permutation_n) {
    throw BudgetExceeded("vertex enumeration over " + std::to_string(n) +
                         "! orders exceeds the permutation budget");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<IntVector> vertices;
  do {
    IntVector x(n);
    Mask prefix = 0;
    for (int e : order) {
      const std::int64_t before = f.Eval(prefix);
      prefix |= Bit(e);
      x[e] = f.Eval(prefix) - before;
    }
    vertices.insert(std::move(x));
  } while (std::next_permutation(order.begin(), order.end()));
  return {{vertices.begin(), vertices.end()}, "greedy over all orders"};
}

std::optional<int> MinDecompositionSize(const SubmodularFn& f,
                                        const IntVector& w, std::int64_t k,
                                        const Budget& budget) {
  if (k < 1) throw UsageError("k must be positive");
  if (k > budget.max_k) {
    throw BudgetExceeded("k = " + std::to_string(k) + " exceeds the oracle budget");
  }
  if (w.size() != f.size()) throw UsageError("w has the wrong length");
  const PointSet bases = EnumerateBasePoints(f, budget);
  if (static_cast<int>(bases.points.size()) > budget.max_points) {
    throw BudgetExceeded(std::to_string(bases.points.size()) +
                         " base points exceed the oracle budget of " +
                         std::to_string(budget.max_points));
  }
  if (bases.points.empty()) return std::nullopt;
  const int n = f.size();
  IntVector lo = bases.points.front(), hi = bases.points.front();
  for (const auto& p : bases.points) {
    for (int e = 0; e < n; ++e) {
      lo[e] = std::min(lo[e], p[e]);
      hi[e] = std::max(hi[e], p[e]);
    }
  }
  Search search(bases.points, lo, hi);
  const int most = static_cast<int>(
      std::min<std::int64_t>(k, static_cast<std::int64_t>(bases.points.size())));
  for (int slots = 1; slots <= most; ++slots) {
    if (search.Exists(slots, k, w)) return slots;
  }
  return std::nullopt;
}

CrLowerBound CrExact(const SubmodularFn& f, std::int64_t k_max,
                     const Budget& budget) {
  if (k_max < 1) throw UsageError("k_max must be positive");
  if (k_max > budget.max_k) {
    throw BudgetExceeded("k_max = " + std::to_string(k_max) +
                         " exceeds the oracle budget");
  }
  CrLowerBound best;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (const auto& w : EnumerateScaledBasePoints(f, k, budget).points) {
      const std::optional<int> size = MinDecompositionSize(f, w, k, budget);
      if (size && *size > best.value) best = {*size, w, k};
    }
  }
  return best;
}

}  // namespace polybase::oracle
