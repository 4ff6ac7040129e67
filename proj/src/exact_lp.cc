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
#include <sstream>

#include "polybase/errors.h"

namespace polybase {
namespace {

// Rank of a list of row vectors, by exact Gaussian elimination.
int RowRank(std::vector<RationalPoint> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || sgn(rows[r][c]) == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

Rational SubsetSum(const RationalPoint& x, Mask m) {
  Rational s = 0;
  for (int i : Elements(m)) s += x[i];
  return s;
}

RationalPoint Incidence(Mask m, int n) {
  RationalPoint v(n, Rational(0));
  for (int i : Elements(m)) v[i] = 1;
  return v;
}

// Lexicographic-objective simplex on the dual of
//
//   max c(eps) . x   s.t.  x(U_i) <= b_i,  x(V_j) = d_j,  x free,
//
// where c(eps) = e_1 + eps e_2 + eps^2 e_3 + ... . The dual is
//
//   min b.y + d.z   s.t.  sum_i y_i 1_{U_i} + sum_j z_j 1_{V_j} = c(eps),
//                         y >= 0,
//
// a standard-form problem with only n rows. Its right-hand side is the
// identity matrix read row by row as lexicographic vectors, so every basis
// is nondegenerate: basic values are the rows of B^{-1}, never zero. The
// objective therefore strictly decreases at each pivot and the method
// terminates without any further anti-cycling rule. At the optimum the
// simplex multipliers pi = c_B B^{-1} are the lexicographically largest
// feasible x.
class LexDualSimplex {
 public:
  explicit LexDualSimplex(const ConstraintSystem& system)
      : n_(system.ground.size()) {
    for (const auto& c : system.inequalities) {
      columns_.push_back({c.subset, +1, c.rhs});
    }
    // Free dual variables of equalities split into two signed columns.
    for (const auto& c : system.equalities) {
      columns_.push_back({c.subset, +1, c.rhs});
      columns_.push_back({c.subset, -1, -c.rhs});
    }
    subset_sums_.assign(std::size_t{1} << n_, Rational(0));
    binv_.assign(n_, RationalPoint(n_, Rational(0)));
    for (int r = 0; r < n_; ++r) binv_[r][r] = 1;
    // Artificial columns are numbered after the structural ones.
    basis_.resize(n_);
    for (int r = 0; r < n_; ++r) basis_[r] = Artificial(r);
  }

  std::optional<RationalPoint> Solve(std::int64_t* pivots) {
    if (!Run(/*phase_one=*/true, pivots)) return std::nullopt;
    for (int r = 0; r < n_; ++r) {
      if (IsArtificial(basis_[r])) return std::nullopt;
    }
    if (!Run(/*phase_one=*/false, pivots)) return std::nullopt;
    return Multipliers(/*phase_one=*/false);
  }

 private:
  struct Column {
    Mask subset;
    int sign;
    Rational cost;
  };

  int Artificial(int r) const { return static_cast<int>(columns_.size()) + r; }
  bool IsArtificial(int j) const {
    return j >= static_cast<int>(columns_.size());
  }

  Rational Cost(int j, bool phase_one) const {
    if (IsArtificial(j)) return phase_one ? 1 : 0;
    return phase_one ? Rational(0) : columns_[j].cost;
  }

  RationalPoint Multipliers(bool phase_one) const {
    RationalPoint pi(n_, Rational(0));
    for (int r = 0; r < n_; ++r) {
      const Rational cb = Cost(basis_[r], phase_one);
      if (sgn(cb) == 0) continue;
      for (int c = 0; c < n_; ++c) pi[c] += cb * binv_[r][c];
    }
    return pi;
  }

  // Returns false if the problem is unbounded (primal infeasible).
  bool Run(bool phase_one, std::int64_t* pivots) {
    std::vector<int> in_basis(columns_.size(), 0);
    for (int j : basis_) {
      if (!IsArtificial(j)) in_basis[j] = 1;
    }
    Rational reduced;
    Rational best;
    while (true) {
      const RationalPoint pi = Multipliers(phase_one);
      for (Mask u = 1; u < subset_sums_.size(); ++u) {
        subset_sums_[u] = subset_sums_[u & (u - 1)] + pi[std::countr_zero(u)];
      }
      // Dantzig pricing, ties to the lowest column index.
      int entering = -1;
      for (int j = 0; j < static_cast<int>(columns_.size()); ++j) {
        if (in_basis[j]) continue;
        const Column& col = columns_[j];
        if (phase_one) {
          reduced = -col.sign * subset_sums_[col.subset];
        } else if (col.sign > 0) {
          reduced = col.cost - subset_sums_[col.subset];
        } else {
          reduced = col.cost + subset_sums_[col.subset];
        }
        if (sgn(reduced) < 0 && (entering < 0 || reduced < best)) {
          entering = j;
          best = reduced;
        }
      }
      if (entering < 0) return true;

      const Column& col = columns_[entering];
      const std::vector<int> support = Elements(col.subset);
      RationalPoint alpha(n_, Rational(0));
      for (int r = 0; r < n_; ++r) {
        for (int c : support) alpha[r] += binv_[r][c];
        if (col.sign < 0) alpha[r] = -alpha[r];
      }

      // Lexicographic ratio test on rows of B^{-1} / alpha.
      int leaving = -1;
      for (int r = 0; r < n_; ++r) {
        if (sgn(alpha[r]) <= 0) continue;
        if (leaving < 0 || LexLess(r, alpha[r], leaving, alpha[leaving])) {
          leaving = r;
        }
      }
      if (leaving < 0) return false;

      const Rational pivot = alpha[leaving];
      for (int c = 0; c < n_; ++c) binv_[leaving][c] /= pivot;
      for (int r = 0; r < n_; ++r) {
        if (r == leaving || sgn(alpha[r]) == 0) continue;
        for (int c = 0; c < n_; ++c) {
          binv_[r][c] -= alpha[r] * binv_[leaving][c];
        }
      }
      if (!IsArtificial(basis_[leaving])) in_basis[basis_[leaving]] = 0;
      basis_[leaving] = entering;
      in_basis[entering] = 1;
      if (pivots != nullptr) ++*pivots;
    }
  }

  // binv[a] / alpha_a <lex binv[b] / alpha_b, both alphas positive.
  bool LexLess(int a, const Rational& alpha_a, int b,
               const Rational& alpha_b) const {
    for (int c = 0; c < n_; ++c) {
      const Rational lhs = binv_[a][c] * alpha_b;
      const Rational rhs = binv_[b][c] * alpha_a;
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  }

  int n_;
  std::vector<Column> columns_;
  std::vector<Rational> subset_sums_;
  std::vector<RationalPoint> binv_;
  std::vector<int> basis_;
};

}  // namespace

std::string ConstraintSystem::ToText() const {
  std::ostringstream out;
  out << "# ground " << ground.Format(ground.full()) << "\n";
  if (known_infeasible) out << "# infeasible: " << infeasibility_reason << "\n";
  for (const auto& c : equalities) {
    out << "x(" << ground.Format(c.subset) << ") = " << c.rhs << "\n";
  }
  for (const auto& c : inequalities) {
    out << "x(" << ground.Format(c.subset) << ") <= " << c.rhs << "\n";
  }
  return out.str();
}

bool ConstraintSystem::Satisfies(const RationalPoint& x) const {
  if (static_cast<int>(x.size()) != ground.size()) return false;
  for (const auto& c : equalities) {
    if (SubsetSum(x, c.subset) != c.rhs) return false;
  }
  for (const auto& c : inequalities) {
    if (SubsetSum(x, c.subset) > c.rhs) return false;
  }
  return true;
}

ConstraintSystem BuildIntersectionSystem(const SubmodularFn& f,
                                         const SubmodularFn& g) {
  if (!(f.ground() == g.ground())) {
    throw UsageError("intersection of base polytopes over different grounds");
  }
  ConstraintSystem system{f.ground(), {}, {}, false, {}};
  const Mask full = f.ground().full();
  if (f.Total() != g.Total()) {
    system.known_infeasible = true;
    system.infeasibility_reason = "f(E) = " + std::to_string(f.Total()) +
                                  " differs from g(E) = " +
                                  std::to_string(g.Total());
  }
  for (Mask u = 1; u <= full; ++u) {
    system.inequalities.push_back({u, Rational(f.Eval(u))});
    system.inequalities.push_back({u, Rational(g.Eval(u))});
  }
  system.equalities.push_back({full, Rational(f.Total())});
  system.equalities.push_back({full, Rational(g.Total())});
  return system;
}

std::optional<RationalPoint> FindVertex(const ConstraintSystem& system,
                                        const LpOptions& options) {
  if (options.dump != nullptr) *options.dump << system.ToText() << "\n";
  if (options.stats != nullptr) ++options.stats->solves;
  if (system.known_infeasible) return std::nullopt;
  LexDualSimplex simplex(system);
  std::optional<RationalPoint> x = simplex.Solve(
      options.stats != nullptr ? &options.stats->pivots : nullptr);
  if (x && options.stats != nullptr) {
    ++options.stats->vertices;
    if (std::any_of(x->begin(), x->end(),
                    [](const Rational& v) { return v.get_den() != 1; })) {
      ++options.stats->fractional_vertices;
    }
  }
  return x;
}

IntVector AssertIntegral(const RationalPoint& p,
                         const ConstraintSystem* system) {
  IntVector out(static_cast<int>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpz_class& den = p[i].get_den();
    const mpz_class& num = p[i].get_num();
    if (den != 1 || !num.fits_slong_p()) {
      throw InvariantViolation(
          "vertex " + ToString(p) + " of a polymatroid intersection is not integral",
          system != nullptr ? system->ToText() : std::string());
    }
    out[static_cast<int>(i)] = num.get_si();
  }
  return out;
}

int AffineRank(std::span<const RationalPoint> points) {
  if (points.empty()) throw UsageError("affine rank of an empty point list");
  std::vector<RationalPoint> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) {
      d[c] = points[i][c] - points[0][c];
    }
    diffs.push_back(std::move(d));
  }
  return RowRank(std::move(diffs));
}

int TightRank(const ConstraintSystem& system, const RationalPoint& x) {
  const int n = system.ground.size();
  std::vector<RationalPoint> normals;
  for (const auto& c : system.equalities) {
    normals.push_back(Incidence(c.subset, n));
  }
  for (const auto& c : system.inequalities) {
    if (SubsetSum(x, c.subset) == c.rhs) {
      normals.push_back(Incidence(c.subset, n));
    }
  }
  return RowRank(std::move(normals));
}

RationalPoint ToRational(const IntVector& x) {
  RationalPoint p;
  for (auto v : x) p.emplace_back(static_cast<long>(v));
  return p;
}

std::string ToString(const RationalPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += p[i].get_str();
  }
  return out + ")";
}

}  // namespace polybase
