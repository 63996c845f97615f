#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghznl/ghz.hpp"
#include "ghznl/io.hpp"

namespace ghznl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // computed values on success, first failure otherwise
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

// Where the one-level transform tables come from. Injectable so the oracle's
// own sensitivity is testable: feeding it a corrupted table must fail.
using TransformSource = std::function<PtTransform(Bipartition)>;
TransformSource builtin_transform_source();

struct OracleReport {
  bool passed = false;
  int checks = 0;      // individual exact comparisons performed
  std::string detail;  // first failure; empty when passed
};

// Checks the delivered tables column-by-column against brute-force dense
// partial transposes, their algebra (symmetry, involution, trace
// preservation), the agreement of the twirl and projection forms of the
// dephasing channel on a seeded random hermitian sample, and commutation of
// that channel with the partial transpose.
OracleReport run_transform_oracle(const TransformSource& source);

// The ten acceptance checks, in order, each timed and fenced: a throwing
// criterion is reported failed, not propagated. `progress` (when non-null)
// receives one line per criterion as it completes.
SuiteReport run_reference_suite(std::ostream* progress = nullptr);

// Timing fields are omitted so two runs serialize byte-identically.
Json suite_report_to_json(const SuiteReport& rep);

}  // namespace ghznl
