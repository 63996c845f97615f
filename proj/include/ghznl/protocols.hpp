#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghznl/certifier.hpp"
#include "ghznl/ghz.hpp"

namespace ghznl {

// One round of the two-outcome parity measurement across `cut`, applied to
// the qubits of a single level. Its outcome classes are the two index
// quadruples of pt_quadruples(cut).
struct ParityMeasurement {
  Bipartition cut;
  int level = 0;
};

struct TranscriptNode {
  enum class Kind { parity, identify, leaf };
  Kind kind = Kind::leaf;
  int level = 0;                     // level measured (parity/identify nodes)
  std::vector<LatticeIndex> states;  // candidates entering this node
  bool resolved = false;             // leaves: candidates narrowed to <= 2
  std::string note;                  // leaves: why the branch ended
  std::vector<TranscriptNode> children;
};

// Full record of one cut's protocol run: a tree of measurements whose
// leaves each hold the surviving candidates.
struct ProtocolOutcome {
  Bipartition cut = Bipartition::a_bc;
  bool success = false;  // every leaf resolved
  TranscriptNode root;
};

struct ProtocolResult {
  std::optional<Bipartition> cut;         // first cut that succeeds, if any
  std::vector<ProtocolOutcome> attempts;  // cut order; stops after a success
};

// Partition candidates by the parity class of their value at one cell:
// first element gets the class of pt_quadruples(cut)[0]. Order preserved.
std::pair<std::vector<GhzIndex>, std::vector<GhzIndex>> reduce_by_parity(
    const std::vector<GhzIndex>& candidates, Bipartition cut);

// Single-level case: a cut works when the parity split leaves at most two
// candidates on each side (any two basis vectors can be told apart across
// any cut by a local two-outcome identification). Cuts are tried in order;
// the transcript of every attempted cut is returned.
ProtocolResult find_distinguishing_bipartition(const std::vector<GhzIndex>& candidates);

// Multi-level protocol at a single cut, one level per round: parity-split,
// then if at most two distinct values remain in a branch, identify the
// value and recurse into the next level. A branch with three or more
// distinct values in one parity class is stuck: those projectors are
// pairwise related by the transform and no further one-way round separates
// them.
ProtocolOutcome run_lattice_protocol(const StateSet& set, Bipartition cut);

// First cut (in order) whose protocol succeeds. Success here implies the
// discrimination value at that cut is exactly 1.
ProtocolResult lattice_protocol(const StateSet& set);

}  // namespace ghznl
