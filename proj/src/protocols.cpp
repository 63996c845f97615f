#include "ghznl/protocols.hpp"

#include <algorithm>
#include <set>

namespace ghznl {

namespace {

bool in_first_class(GhzIndex g, Bipartition cut) {
  const auto& quads = pt_quadruples(cut);
  return std::find(quads[0].begin(), quads[0].end(), g) != quads[0].end();
}

TranscriptNode explore(std::vector<LatticeIndex> states, Bipartition cut, int level, int t,
                       bool& success) {
  TranscriptNode node;
  node.states = std::move(states);

  if (node.states.size() <= 2) {
    node.kind = TranscriptNode::Kind::leaf;
    node.resolved = true;
    node.note = "at most two candidates";
    return node;
  }
  if (level >= t) {
    node.kind = TranscriptNode::Kind::leaf;
    node.note = "levels exhausted";
    success = false;
    return node;
  }

  node.kind = TranscriptNode::Kind::parity;
  node.level = level;
  std::array<std::vector<LatticeIndex>, 2> sides;
  for (const LatticeIndex& v : node.states)
    sides[in_first_class(v[level], cut) ? 0 : 1].push_back(v);

  for (auto& side : sides) {
    if (side.empty()) continue;
    if (side.size() <= 2) {
      TranscriptNode leaf;
      leaf.kind = TranscriptNode::Kind::leaf;
      leaf.states = std::move(side);
      leaf.resolved = true;
      leaf.note = "at most two candidates";
      node.children.push_back(std::move(leaf));
      continue;
    }
    std::set<int> distinct;
    for (const LatticeIndex& v : side) distinct.insert(v[level].value());
    if (distinct.size() > 2) {
      TranscriptNode leaf;
      leaf.kind = TranscriptNode::Kind::leaf;
      leaf.states = std::move(side);
      leaf.note = "three or more basis values within one parity class";
      node.children.push_back(std::move(leaf));
      success = false;
      continue;
    }
    // the level's value is now one of two basis vectors, which a local
    // measurement across the cut identifies; branch per value
    TranscriptNode ident;
    ident.kind = TranscriptNode::Kind::identify;
    ident.level = level;
    ident.states = side;
    for (int value : distinct) {
      std::vector<LatticeIndex> branch;
      for (const LatticeIndex& v : side)
        if (v[level].value() == value) branch.push_back(v);
      ident.children.push_back(explore(std::move(branch), cut, level + 1, t, success));
    }
    node.children.push_back(std::move(ident));
  }
  return node;
}

}  // namespace

std::pair<std::vector<GhzIndex>, std::vector<GhzIndex>> reduce_by_parity(
    const std::vector<GhzIndex>& candidates, Bipartition cut) {
  std::pair<std::vector<GhzIndex>, std::vector<GhzIndex>> out;
  for (GhzIndex g : candidates)
    (in_first_class(g, cut) ? out.first : out.second).push_back(g);
  return out;
}

ProtocolOutcome run_lattice_protocol(const StateSet& set, Bipartition cut) {
  ProtocolOutcome out;
  out.cut = cut;
  out.success = true;
  out.root = explore(set.states(), cut, 0, set.t(), out.success);
  return out;
}

ProtocolResult lattice_protocol(const StateSet& set) {
  ProtocolResult res;
  for (Bipartition cut : all_bipartitions) {
    res.attempts.push_back(run_lattice_protocol(set, cut));
    if (res.attempts.back().success) {
      res.cut = cut;
      break;
    }
  }
  return res;
}

ProtocolResult find_distinguishing_bipartition(const std::vector<GhzIndex>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::vector<LatticeIndex> states;
  states.reserve(candidates.size());
  for (GhzIndex g : candidates) states.push_back(LatticeIndex({g.value()}));
  return lattice_protocol(StateSet(1, std::move(states)));
}

}  // namespace ghznl
