#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghznl/certifier.hpp"

namespace ghznl {

enum class SearchStrategy { exhaustive, greedy };

// Position in the exhaustive scan: subsets of one size are visited in
// lexicographic order of their index tuples; `rank` is the next tuple to
// examine within `size`.
struct SearchCursor {
  std::size_t size = 1;
  std::uint64_t rank = 0;
};

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::optional<std::size_t> target_size;   // restrict to one subset size
  std::uint64_t budget = 100000;            // LP solves (exact and approximate)
  bool float_prefilter = true;              // screen with doubles first
  std::optional<SearchCursor> resume;       // continue an interrupted scan
  std::function<void(const std::string&)> log;  // optional progress lines
};

struct CertifiedSubset {
  std::vector<std::size_t> indices;  // positions within the candidate set
  std::array<Rational, 3> betas;
};

struct SearchReport {
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t lp_solves = 0;   // budget consumed
  std::uint64_t examined = 0;    // subsets looked at (pruned ones excluded)
  bool complete = false;
  std::optional<SearchCursor> cursor;   // where to resume when incomplete
  std::vector<CertifiedSubset> found;   // minimal certified subsets, scan order
};

// Find inclusion-minimal certified subsets of the candidate set.
//
// Exhaustive: sizes ascending (or exactly target_size), lexicographic within
// a size, skipping supersets of anything already found (certification is
// monotone under adding states, so such supsets cannot be minimal). Every
// reported subset is certified exactly; the float prefilter only rules
// subsets out, and any subset it passes is re-solved exactly. Runs out of
// budget leave `complete` false and a cursor to resume from.
//
// Greedy: drop states one at a time, keeping the set certified (each step
// re-verified exactly), until no single removal survives; reports that one
// locally minimal subset. Deterministic: always the lowest removable index.
SearchReport search_min_subsets(const StateSet& candidates, const SearchOptions& opts);

}  // namespace ghznl
