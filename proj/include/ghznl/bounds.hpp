#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ghznl/certifier.hpp"
#include "ghznl/rational.hpp"

namespace ghznl {

// Unimodular phase. The four unit phases are represented exactly; anything
// else is an angle in radians and drops the pair test to floating point.
struct GhzPhase {
  enum class Kind { plus_one, minus_one, plus_i, minus_i, angle };
  Kind kind = Kind::plus_one;
  double theta = 0.0;  // used when kind == angle

  bool is_exact() const { return kind != Kind::angle; }
  GaussianRational exact_value() const;  // throws for angle phases
  std::complex<double> value() const;

  static GhzPhase parse(const std::string& s);  // "+1" "-1" "+i" "-i" or radians
  std::string str() const;
};

// Equal-weight superposition of w distinct three-party computational kets
// with local dimension d: sum_m phase_m |a_m, b_m, c_m> / sqrt(w).
struct GhzLikeState {
  int d = 2;
  std::vector<std::array<int, 3>> terms;
  std::vector<GhzPhase> phases;

  int weight() const { return static_cast<int>(terms.size()); }
  void validate() const;  // digit ranges, distinct terms, aligned sizes
};

// Collection sharing one local dimension and one weight.
struct GhzLikeSet {
  int d = 2;
  int w = 1;
  std::vector<GhzLikeState> states;

  std::size_t size() const { return states.size(); }
  void validate() const;
  GhzLikeSet subset(const std::vector<std::size_t>& indices) const;
};

// Pairwise inner products all zero. Exact whenever every phase involved is
// one of the four units; otherwise |<a|b>| <= 1e-12 numerically.
bool orthogonality_check(const GhzLikeSet& set);
std::optional<std::pair<std::size_t, std::size_t>> find_nonorthogonal_pair(const GhzLikeSet& set);

// Largest number of weight-w states of this shape a single positive
// partial-transpose measurement can tell apart: d^3/w, as an exact rational.
Rational cardinality_bound(int d, int w);

// s > d^3/w certifies that no such measurement distinguishes the set.
// Requires pairwise orthogonality (throws std::invalid_argument otherwise);
// false means the census is inconclusive, not that the set is
// distinguishable.
bool certify_by_bound(const GhzLikeSet& set);

// Lattice states are the d = 2^t, w = 2^t instance of the same shape.
GhzLikeState lattice_to_ghzlike(const LatticeIndex& v);
GhzLikeSet to_ghzlike(const StateSet& set);

}  // namespace ghznl
