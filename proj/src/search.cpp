#include "ghznl/search.hpp"

#include <stdexcept>

namespace ghznl {

namespace {

std::uint64_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // stepwise exact
  return static_cast<std::uint64_t>(r);
}

// lexicographic unranking: indices ascending, rank 0 = {0,1,...,k-1}
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t start = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = start;; ++v) {
      std::uint64_t block = choose(n - v - 1, k - slot - 1);
      if (rank < block) {
        out.push_back(v);
        start = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct BudgetGate {
  std::uint64_t limit;
  std::uint64_t used = 0;
  bool take() {
    if (used >= limit) return false;
    ++used;
    return true;
  }
};

enum class Screen { certified, rejected, out_of_budget };

struct Eval {
  Screen screen = Screen::rejected;
  std::array<Rational, 3> betas;
};

// Exact certification of one subset with budget accounting. The prefilter
// may only reject; anything it passes is re-solved exactly, and a certified
// verdict additionally solves the measurement-side LPs to observe the zero
// duality gap.
Eval evaluate(const StateSet& sub, bool prefilter, BudgetGate& gate) {
  Eval ev;
  if (prefilter) {
    for (Bipartition cut : all_bipartitions) {
      if (!gate.take()) { ev.screen = Screen::out_of_budget; return ev; }
      LpApprox a = solve_approx(build_dual_lp(sub, cut));
      if (a.gave_up) break;  // no float verdict for this subset; go exact
      if (a.status == LpStatus::optimal && a.value > 1.0 - 1e-6) return ev;  // rejected
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!gate.take()) { ev.screen = Screen::out_of_budget; return ev; }
    LpInstance lp = build_dual_lp(sub, all_bipartitions[i]);
    LpResult res = solve(lp);
    if (res.status != LpStatus::optimal || !certify_optimality(lp, res))
      throw std::logic_error("discrimination LP failed during search");
    ev.betas[i] = res.value;
    if (res.value >= Rational(1)) return ev;  // rejected
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!gate.take()) { ev.screen = Screen::out_of_budget; return ev; }
    LpInstance lp = build_primal_lp(sub, all_bipartitions[i]);
    LpResult res = solve(lp);
    if (res.status != LpStatus::optimal || !certify_optimality(lp, res) ||
        res.value != ev.betas[i])
      throw std::logic_error("duality gap during search confirmation");
  }
  ev.screen = Screen::certified;
  return ev;
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (std::size_t i : idx) m |= std::uint64_t{1} << i;
  return m;
}

void say(const SearchOptions& opts, const std::string& line) {
  if (opts.log) opts.log(line);
}

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + "}";
}

SearchReport run_exhaustive(const StateSet& candidates, const SearchOptions& opts) {
  std::size_t n = candidates.size();
  SearchReport rep;
  rep.strategy = SearchStrategy::exhaustive;
  BudgetGate gate{opts.budget};
  std::vector<std::uint64_t> found_masks;

  std::size_t size_lo = 1, size_hi = n;
  if (opts.target_size) {
    if (*opts.target_size < 1 || *opts.target_size > n)
      throw std::invalid_argument("target size out of range");
    size_lo = size_hi = *opts.target_size;
  }
  std::uint64_t start_rank = 0;
  if (opts.resume) {
    if (opts.resume->size < size_lo || opts.resume->size > size_hi)
      throw std::invalid_argument("resume cursor size out of range");
    size_lo = opts.resume->size;
    start_rank = opts.resume->rank;
  }

  for (std::size_t k = size_lo; k <= size_hi; ++k) {
    std::uint64_t total = choose(n, k);
    std::uint64_t rank = (opts.resume && k == opts.resume->size) ? start_rank : 0;
    if (rank >= total) continue;
    say(opts, "size " + std::to_string(k) + ": " + std::to_string(total - rank) + " of " +
                  std::to_string(total) + " subsets to scan");
    std::vector<std::size_t> idx = unrank_combination(n, k, rank);
    for (;; ++rank) {
      std::uint64_t m = mask_of(idx);
      bool pruned = false;
      for (std::uint64_t fm : found_masks)
        if ((m & fm) == fm) { pruned = true; break; }
      if (!pruned) {
        Eval ev = evaluate(candidates.subset(idx), opts.float_prefilter, gate);
        if (ev.screen == Screen::out_of_budget) {
          rep.lp_solves = gate.used;
          rep.complete = false;
          rep.cursor = SearchCursor{k, rank};
          say(opts, "budget exhausted at size " + std::to_string(k) + ", rank " +
                        std::to_string(rank));
          return rep;
        }
        ++rep.examined;
        if (ev.screen == Screen::certified) {
          found_masks.push_back(m);
          rep.found.push_back({idx, ev.betas});
          say(opts, "certified subset " + join_indices(idx));
        }
      }
      if (!next_combination(idx, n)) break;
    }
  }
  rep.lp_solves = gate.used;
  rep.complete = true;
  return rep;
}

SearchReport run_greedy(const StateSet& candidates, const SearchOptions& opts) {
  std::size_t n = candidates.size();
  SearchReport rep;
  rep.strategy = SearchStrategy::greedy;
  BudgetGate gate{opts.budget};

  std::vector<std::size_t> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = i;

  say(opts, "greedy descent from the full set of " + std::to_string(n));
  Eval full = evaluate(candidates, opts.float_prefilter, gate);
  rep.lp_solves = gate.used;
  if (full.screen == Screen::out_of_budget) {
    rep.cursor = SearchCursor{n, 0};
    return rep;
  }
  ++rep.examined;
  if (full.screen == Screen::rejected) {
    rep.complete = true;  // nothing to minimize
    say(opts, "full set is not certified; nothing to minimize");
    return rep;
  }

  Eval best = full;
  std::size_t floor_size = opts.target_size.value_or(1);
  bool shrunk = true;
  while (shrunk && current.size() > floor_size) {
    shrunk = false;
    for (std::size_t pos = 0; pos < current.size(); ++pos) {
      std::vector<std::size_t> trial = current;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
      Eval ev = evaluate(candidates.subset(trial), opts.float_prefilter, gate);
      rep.lp_solves = gate.used;
      if (ev.screen == Screen::out_of_budget) {
        rep.cursor = SearchCursor{current.size(), 0};
        return rep;
      }
      ++rep.examined;
      if (ev.screen == Screen::certified) {
        std::size_t dropped = current[pos];
        current = std::move(trial);
        best = ev;
        shrunk = true;
        say(opts, "dropped candidate " + std::to_string(dropped) + ", " +
                      std::to_string(current.size()) + " states remain certified");
        break;  // restart from the lowest index of the smaller set
      }
    }
  }
  rep.found.push_back({current, best.betas});
  rep.complete = true;
  return rep;
}

}  // namespace

SearchReport search_min_subsets(const StateSet& candidates, const SearchOptions& opts) {
  if (candidates.size() > 64)
    throw std::invalid_argument("search supports at most 64 candidate states");
  // budget 0 is legal: it yields an immediately-incomplete report with a
  // cursor at the start of the scan.
  if (opts.strategy == SearchStrategy::exhaustive) return run_exhaustive(candidates, opts);
  return run_greedy(candidates, opts);
}

}  // namespace ghznl
