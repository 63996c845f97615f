#pragma once

#include <cstdint>
#include <vector>

#include "ghznl/rational.hpp"

namespace ghznl {

enum class Sense { minimize, maximize };
enum class Relation { le, eq, ge };

struct LpConstraint {
  std::vector<Rational> a;
  Relation rel = Relation::le;
  Rational rhs;
};

struct LpInstance {
  Sense sense = Sense::minimize;
  std::vector<Rational> c;
  std::vector<LpConstraint> rows;
  std::vector<bool> nonneg;  // per variable: true -> x >= 0, false -> free

  std::size_t num_vars() const { return c.size(); }
  void validate() const;  // shape checks; throws std::invalid_argument
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;                // objective in the instance's own sense
  std::vector<Rational> primal;  // num_vars entries when optimal, else empty
  std::vector<Rational> dual;    // one multiplier per row when optimal
  std::uint64_t pivots = 0;
};

// Exact two-phase primal simplex over the rationals. Dense tableau; free
// variables are split, rows are normalized to nonnegative right-hand sides.
// Connected components of the variable/constraint incidence graph are
// detected first and solved independently (the instances this project
// builds decompose along the transform's block structure, which is what
// keeps the exact solves within budget).
//
// Dual multiplier convention, in terms of the original rows:
//   minimize: y_i >= 0 on >=-rows, y_i <= 0 on <=-rows, free on =-rows,
//             and sum_i y_i a_ij <= c_j for x_j >= 0 (= c_j for free x_j);
//   maximize: all of the above reversed (y_i <= 0 on >=-rows, etc.).
// With these signs b'y equals the optimal value in both senses.
LpResult solve(const LpInstance& lp);

// Same algorithm instantiated over doubles (tolerance 1e-9). Returns value
// and primal only. Used as a prefilter; verdicts always come from solve().
// Rounding can defeat the anti-cycling rule that keeps the exact solver
// finite, so the float solver carries a pivot cap: when it trips, the
// result comes back with `gave_up` set and no verdict at all.
struct LpApprox {
  LpStatus status = LpStatus::infeasible;
  bool gave_up = false;  // numerical stall; fall back to the exact solver
  double value = 0.0;
  std::vector<double> primal;
};
LpApprox solve_approx(const LpInstance& lp);

// First-principles recheck of an optimal result: exact primal feasibility,
// dual feasibility under the convention above, and equal objective values
// c'x == value == b'y (weak duality makes that an optimality proof).
// Returns false on any violation or when status != optimal.
bool certify_optimality(const LpInstance& lp, const LpResult& res);

}  // namespace ghznl
