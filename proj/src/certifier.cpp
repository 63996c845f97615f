#include "ghznl/certifier.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "ghznl/matrix.hpp"
#include "ghznl/threads.hpp"

namespace ghznl {

StateSet::StateSet(int t, std::vector<LatticeIndex> states) : t_(t), states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("state set: empty");
  std::vector<std::uint64_t> ranks;
  ranks.reserve(states_.size());
  for (const LatticeIndex& v : states_) {
    if (v.t() != t_)
      throw std::invalid_argument("state set: " + v.str() + " does not have " +
                                  std::to_string(t_) + " levels");
    ranks.push_back(v.rank());
  }
  std::sort(ranks.begin(), ranks.end());
  if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
    throw std::invalid_argument("state set: duplicate state");
}

StateSet StateSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<LatticeIndex> sel;
  sel.reserve(indices.size());
  for (std::size_t k : indices) {
    if (k >= states_.size()) throw std::out_of_range("state set: subset index out of range");
    sel.push_back(states_[k]);
  }
  return StateSet(t_, std::move(sel));
}

namespace {

// The transform's tensor power, as rows indexed by lattice rank. Row i has
// 4^t nonzero entries.
Rational transform_entry(const PtTransform& tr, int t, std::size_t i, std::size_t j) {
  Rational v(1);
  for (int l = 0; l < t; ++l) {
    int shift = 3 * (t - 1 - l);
    const Rational& f = tr.m[(i >> shift) & 7][(j >> shift) & 7];
    if (f.is_zero()) return Rational(0);
    v *= f;
  }
  return v;
}

}  // namespace

LpInstance build_dual_lp(const StateSet& set, Bipartition cut) {
  const int t = set.t();
  const std::size_t dim = DiagOperator::zero(t).dim();
  const std::size_t s = set.size();
  const PtTransform& tr = pt_transform(cut);

  LpInstance lp;
  lp.sense = Sense::minimize;
  std::size_t nvars = dim * (1 + s);  // y block, then q_k blocks
  lp.c.assign(nvars, Rational(0));
  lp.nonneg.assign(nvars, true);
  Rational inv_s(1, static_cast<long>(s));
  for (std::size_t i = 0; i < dim; ++i) {
    lp.c[i] = inv_s;
    lp.nonneg[i] = false;
  }
  lp.rows.reserve(s * dim);
  for (std::size_t k = 0; k < s; ++k) {
    std::size_t target = set[k].rank();
    for (std::size_t i = 0; i < dim; ++i) {
      LpConstraint row;
      row.a.assign(nvars, Rational(0));
      row.a[i] = Rational(1);
      std::size_t qbase = dim * (1 + k);
      for (std::size_t j = 0; j < dim; ++j) {
        Rational w = transform_entry(tr, t, i, j);
        if (!w.is_zero()) row.a[qbase + j] = -w;
      }
      row.rel = Relation::ge;
      row.rhs = Rational(i == target ? 1 : 0);
      lp.rows.push_back(std::move(row));
    }
  }
  return lp;
}

LpInstance build_primal_lp(const StateSet& set, Bipartition cut) {
  const int t = set.t();
  const std::size_t dim = DiagOperator::zero(t).dim();
  const std::size_t s = set.size();
  const PtTransform& tr = pt_transform(cut);

  LpInstance lp;
  lp.sense = Sense::maximize;
  std::size_t nvars = dim * s;  // p_k blocks
  lp.c.assign(nvars, Rational(0));
  lp.nonneg.assign(nvars, true);
  Rational inv_s(1, static_cast<long>(s));
  for (std::size_t k = 0; k < s; ++k) lp.c[dim * k + set[k].rank()] = inv_s;

  // sum_k p_k = identity, entry by entry
  for (std::size_t i = 0; i < dim; ++i) {
    LpConstraint row;
    row.a.assign(nvars, Rational(0));
    for (std::size_t k = 0; k < s; ++k) row.a[dim * k + i] = Rational(1);
    row.rel = Relation::eq;
    row.rhs = Rational(1);
    lp.rows.push_back(std::move(row));
  }
  // transformed outcomes stay entrywise nonnegative
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < dim; ++i) {
      LpConstraint row;
      row.a.assign(nvars, Rational(0));
      for (std::size_t j = 0; j < dim; ++j) {
        Rational w = transform_entry(tr, t, i, j);
        if (!w.is_zero()) row.a[dim * k + j] = w;
      }
      row.rel = Relation::ge;
      row.rhs = Rational(0);
      lp.rows.push_back(std::move(row));
    }
  return lp;
}

CutSolutions beta_with_solutions(const StateSet& set, Bipartition cut) {
  const int t = set.t();
  const std::size_t dim = DiagOperator::zero(t).dim();
  const std::size_t s = set.size();

  LpInstance dual = build_dual_lp(set, cut);
  LpResult dres = solve(dual);
  if (dres.status != LpStatus::optimal)
    throw std::logic_error("discrimination LP (certificate side) not optimal");
  if (!certify_optimality(dual, dres))
    throw std::logic_error("certificate-side LP result failed recheck");

  LpInstance primal = build_primal_lp(set, cut);
  LpResult pres = solve(primal);
  if (pres.status != LpStatus::optimal)
    throw std::logic_error("discrimination LP (measurement side) not optimal");
  if (!certify_optimality(primal, pres))
    throw std::logic_error("measurement-side LP result failed recheck");

  if (dres.value != pres.value)
    throw std::logic_error("duality gap between the two discrimination LPs at cut " +
                           std::string(to_string(cut)) + ": " + dres.value.str() + " vs " +
                           pres.value.str());

  CutSolutions out;
  out.value = dres.value;
  out.certificate.cut = cut;
  out.certificate.claimed_value = dres.value;
  out.certificate.y = DiagOperator::zero(t);
  for (std::size_t i = 0; i < dim; ++i) out.certificate.y.c[i] = dres.primal[i];
  out.certificate.qs.reserve(s);
  out.measurement.reserve(s);
  for (std::size_t k = 0; k < s; ++k) {
    DiagOperator q = DiagOperator::zero(t);
    DiagOperator p = DiagOperator::zero(t);
    for (std::size_t j = 0; j < dim; ++j) {
      q.c[j] = dres.primal[dim * (1 + k) + j];
      p.c[j] = pres.primal[dim * k + j];
    }
    out.certificate.qs.push_back(std::move(q));
    out.measurement.push_back(std::move(p));
  }
  return out;
}

Rational beta(const StateSet& set, Bipartition cut) { return beta_with_solutions(set, cut).value; }

Verdict certify(const StateSet& set) {
  Verdict v;
  if (worker_count() > 1) {
    std::array<std::future<Rational>, 3> futs;
    for (std::size_t i = 0; i < 3; ++i)
      futs[i] = std::async(std::launch::async,
                           [&set, i] { return beta(set, all_bipartitions[i]); });
    for (std::size_t i = 0; i < 3; ++i) v.betas[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < 3; ++i) v.betas[i] = beta(set, all_bipartitions[i]);
  }
  v.kind = Verdict::Kind::certified;
  for (std::size_t i = 0; i < 3; ++i) {
    if (v.betas[i] < Rational(1)) continue;
    v.kind = Verdict::Kind::distinguishable;
    v.cut = all_bipartitions[i];
    break;
  }
  return v;
}

VerifyOutcome verify_certificate(const StateSet& set, const Certificate& cert) {
  VerifyOutcome out;
  const int t = set.t();
  const std::size_t s = set.size();
  if (cert.y.t != t) {
    out.detail = "Y has wrong level count";
    return out;
  }
  if (cert.qs.size() != s) {
    out.detail = "certificate carries " + std::to_string(cert.qs.size()) + " Q blocks for " +
                 std::to_string(s) + " states";
    return out;
  }
  out.value = Rational(1, static_cast<long>(s)) * cert.y.trace();
  out.matches_claim = out.value == cert.claimed_value;

  std::vector<DiagOperator> slacks;
  slacks.reserve(s);
  bool feasible = true;
  for (std::size_t k = 0; k < s && feasible; ++k) {
    const DiagOperator& q = cert.qs[k];
    if (q.t != t) {
      out.detail = "Q[" + std::to_string(k) + "] has wrong level count";
      return out;
    }
    if (!q.entrywise_nonneg()) {
      out.detail = "Q[" + std::to_string(k) + "] has a negative coefficient";
      feasible = false;
      break;
    }
    DiagOperator slack = cert.y - apply_pt_diag(q, cert.cut) - DiagOperator::basis(set[k]);
    if (!slack.entrywise_nonneg()) {
      out.detail = "slack operator for state " + std::to_string(k) + " has a negative coefficient";
      feasible = false;
    }
    slacks.push_back(std::move(slack));
  }

  // Second route for small instances: rebuild each slack densely, transpose
  // the party indices directly, and factor. Any disagreement with the
  // coefficient route means one of the two implementations is wrong.
  if (t <= 2) {
    bool dense_feasible = true;
    DenseOperator ydense = dense_from_diag(cert.y);
    for (std::size_t k = 0; k < slacks.size() && dense_feasible; ++k) {
      DenseOperator qd = dense_from_diag(cert.qs[k]);
      Matrix slack_dense = ydense.m - partial_transpose_dense(qd, cert.cut).m -
                           lattice_density(set[k]).m;
      if (!is_psd(slack_dense)) dense_feasible = false;
    }
    if (slacks.size() == s && feasible != dense_feasible)
      throw std::logic_error("coefficient and dense feasibility checks disagree");
  }

  out.feasible = feasible;
  if (feasible) out.detail = "feasible";
  return out;
}

StateSet extend_set_by_pair(const StateSet& set, GhzIndex low) {
  GhzIndex high(7 - low.value());
  std::vector<LatticeIndex> states;
  states.reserve(set.size() * 2);
  for (const LatticeIndex& v : set.states()) states.push_back(v.extended(low));
  for (const LatticeIndex& v : set.states()) states.push_back(v.extended(high));
  return StateSet(set.t() + 1, std::move(states));
}

Certificate extend_certificate_by_pair(const Certificate& cert, GhzIndex low) {
  DiagOperator pair = DiagOperator::zero(1);
  pair.c[static_cast<std::size_t>(low.value())] = Rational(1);
  pair.c[static_cast<std::size_t>(7 - low.value())] = Rational(1);

  Certificate out;
  out.cut = cert.cut;
  out.y = cert.y.tensor(pair);
  out.qs.reserve(cert.qs.size() * 2);
  for (const DiagOperator& q : cert.qs) out.qs.push_back(q.tensor(pair));
  for (const DiagOperator& q : cert.qs) out.qs.push_back(q.tensor(pair));
  out.claimed_value = cert.claimed_value;
  return out;
}

}  // namespace ghznl
