#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ghznl/ghz.hpp"
#include "ghznl/lp.hpp"

namespace ghznl {

// Ordered collection of distinct lattice points sharing one level count.
// Order is part of the identity: certificates refer to states by position.
class StateSet {
 public:
  StateSet(int t, std::vector<LatticeIndex> states);

  int t() const { return t_; }
  std::size_t size() const { return states_.size(); }
  const LatticeIndex& operator[](std::size_t k) const { return states_[k]; }
  const std::vector<LatticeIndex>& states() const { return states_; }

  StateSet subset(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const StateSet& a, const StateSet& b) {
    return a.t_ == b.t_ && a.states_ == b.states_;
  }

 private:
  int t_;
  std::vector<LatticeIndex> states_;
};

// Dual feasible point for the discrimination value at one cut: diagonal Y
// and one diagonal Q per state, certifying value = trace(Y)/s from above.
struct Certificate {
  Bipartition cut;
  DiagOperator y;
  std::vector<DiagOperator> qs;
  Rational claimed_value;
};

struct Verdict {
  enum class Kind { certified, distinguishable, inconclusive };
  Kind kind = Kind::inconclusive;
  std::array<Rational, 3> betas;        // indexed by Bipartition order
  std::optional<Bipartition> cut;       // first cut at value 1 when distinguishable
};

// Optimal discrimination value restricted to measurements whose partial
// transpose across `cut` stays positive, as a pair of LPs over diagonal
// operators.
//
// Minimization side (the certificate form): variables y free and q_k >= 0,
//   y_i - (transform q_k)_i >= [i == state_k]   for all i, k,
//   objective (1/s) sum_i y_i.
// Maximization side: variables p_k >= 0 (one diagonal per state),
//   sum_k p_k = identity entrywise, (transform p_k) >= 0 entrywise,
//   objective (1/s) sum_k p_k[state_k].
LpInstance build_dual_lp(const StateSet& set, Bipartition cut);
LpInstance build_primal_lp(const StateSet& set, Bipartition cut);

// Solves both LPs exactly, rechecks both results from first principles,
// and insists the two optima agree (a gap is a solver bug, reported by
// throwing std::logic_error). Returns the common value.
Rational beta(const StateSet& set, Bipartition cut);

// Same computation, keeping both optimal points: the certificate (dual side)
// is feasible at exactly `value`, and the measurement (primal side) attains
// it. Variable layout of the LPs stays private to this translation unit.
struct CutSolutions {
  Rational value;
  Certificate certificate;
  std::vector<DiagOperator> measurement;  // one diagonal block per state
};
CutSolutions beta_with_solutions(const StateSet& set, Bipartition cut);

// beta at every cut; certified when all three values are below 1.
Verdict certify(const StateSet& set);

struct VerifyOutcome {
  bool feasible = false;
  Rational value;        // trace(y)/s, independent of feasibility
  bool matches_claim = false;
  std::string detail;    // first violated condition when infeasible
};

// Check a certificate against a set: shapes, q_k >= 0 entrywise, and
// y - transform(q_k) - basis(state_k) >= 0 entrywise for every k. For
// t <= 2 each slack operator is additionally rebuilt densely and put
// through the PSD factorization; the two routes disagreeing is an
// internal error (std::logic_error), not a verdict.
VerifyOutcome verify_certificate(const StateSet& set, const Certificate& cert);

// Append one level ranging over the invariant pair {low, 7-low}: states are
// extended first all by `low`, then all by its partner. Such a pair is fixed
// by the transform at every cut, which is what the certificate lift below
// relies on.
StateSet extend_set_by_pair(const StateSet& set, GhzIndex low);

// Lift a certificate of the base set to the extended set at the same value:
// Y' = Y (x) pair, Q'_k = Q'_{k+s} = Q_k (x) pair.
Certificate extend_certificate_by_pair(const Certificate& cert, GhzIndex low);

}  // namespace ghznl
