#include "ghznl/bounds.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ghznl {

GaussianRational GhzPhase::exact_value() const {
  switch (kind) {
    case Kind::plus_one: return GaussianRational(1);
    case Kind::minus_one: return GaussianRational(-1);
    case Kind::plus_i: return GaussianRational::i();
    case Kind::minus_i: return -GaussianRational::i();
    case Kind::angle: break;
  }
  throw std::logic_error("phase is not one of the exact units");
}

std::complex<double> GhzPhase::value() const {
  switch (kind) {
    case Kind::plus_one: return {1, 0};
    case Kind::minus_one: return {-1, 0};
    case Kind::plus_i: return {0, 1};
    case Kind::minus_i: return {0, -1};
    case Kind::angle: return {std::cos(theta), std::sin(theta)};
  }
  std::abort();
}

GhzPhase GhzPhase::parse(const std::string& s) {
  GhzPhase p;
  if (s == "+1" || s == "1") return p;
  if (s == "-1") { p.kind = Kind::minus_one; return p; }
  if (s == "+i" || s == "i") { p.kind = Kind::plus_i; return p; }
  if (s == "-i") { p.kind = Kind::minus_i; return p; }
  std::istringstream in(s);
  double theta;
  if (!(in >> theta) || !(in >> std::ws).eof())
    throw std::invalid_argument("phase must be +1, -1, +i, -i, or an angle in radians: '" + s +
                                "'");
  p.kind = Kind::angle;
  p.theta = theta;
  return p;
}

std::string GhzPhase::str() const {
  switch (kind) {
    case Kind::plus_one: return "+1";
    case Kind::minus_one: return "-1";
    case Kind::plus_i: return "+i";
    case Kind::minus_i: return "-i";
    case Kind::angle: {
      std::ostringstream out;
      out.precision(17);
      out << theta;
      return out.str();
    }
  }
  std::abort();
}

void GhzLikeState::validate() const {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  if (terms.empty()) throw std::invalid_argument("state needs at least one term");
  if (phases.size() != terms.size())
    throw std::invalid_argument("each term needs exactly one phase");
  std::set<std::array<int, 3>> seen;
  for (const auto& t : terms) {
    for (int digit : t)
      if (digit < 0 || digit >= d)
        throw std::invalid_argument("ket digit out of range for local dimension " +
                                    std::to_string(d));
    if (!seen.insert(t).second) throw std::invalid_argument("duplicate ket in one state");
  }
}

void GhzLikeSet::validate() const {
  if (states.empty()) throw std::invalid_argument("set is empty");
  for (const GhzLikeState& st : states) {
    st.validate();
    if (st.d != d) throw std::invalid_argument("states disagree on local dimension");
    if (st.weight() != w) throw std::invalid_argument("states disagree on weight");
  }
}

GhzLikeSet GhzLikeSet::subset(const std::vector<std::size_t>& indices) const {
  GhzLikeSet out;
  out.d = d;
  out.w = w;
  for (std::size_t k : indices) {
    if (k >= states.size()) throw std::out_of_range("subset index out of range");
    out.states.push_back(states[k]);
  }
  return out;
}

namespace {

bool pair_orthogonal(const GhzLikeState& a, const GhzLikeState& b) {
  bool exact = true;
  for (const GhzPhase& p : a.phases) exact &= p.is_exact();
  for (const GhzPhase& p : b.phases) exact &= p.is_exact();
  if (exact) {
    GaussianRational acc;
    for (std::size_t m = 0; m < a.terms.size(); ++m)
      for (std::size_t n = 0; n < b.terms.size(); ++n)
        if (a.terms[m] == b.terms[n])
          acc += a.phases[m].exact_value().conj() * b.phases[n].exact_value();
    return acc.is_zero();
  }
  std::complex<double> acc = 0;
  for (std::size_t m = 0; m < a.terms.size(); ++m)
    for (std::size_t n = 0; n < b.terms.size(); ++n)
      if (a.terms[m] == b.terms[n]) acc += std::conj(a.phases[m].value()) * b.phases[n].value();
  return std::abs(acc) <= 1e-12 * static_cast<double>(a.weight());
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_nonorthogonal_pair(const GhzLikeSet& set) {
  set.validate();
  for (std::size_t i = 0; i < set.states.size(); ++i)
    for (std::size_t j = i + 1; j < set.states.size(); ++j)
      if (!pair_orthogonal(set.states[i], set.states[j])) return std::make_pair(i, j);
  return std::nullopt;
}

bool orthogonality_check(const GhzLikeSet& set) { return !find_nonorthogonal_pair(set); }

Rational cardinality_bound(int d, int w) {
  if (d < 2) throw std::invalid_argument("local dimension must be at least 2");
  if (w < 1 || w > d * d * d)
    throw std::invalid_argument("weight must lie in 1..d^3");
  return Rational(static_cast<long>(d) * d * d, w);
}

bool certify_by_bound(const GhzLikeSet& set) {
  set.validate();
  if (auto bad = find_nonorthogonal_pair(set))
    throw std::invalid_argument("states " + std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " are not orthogonal");
  Rational count(static_cast<long>(set.size()));
  return count > cardinality_bound(set.d, set.w);
}

GhzLikeState lattice_to_ghzlike(const LatticeIndex& v) {
  GhzLikeState st;
  int t = v.t();
  st.d = 1 << t;
  for (const KetTerm& term : lattice_terms(v)) {
    std::array<int, 3> abc = {0, 0, 0};
    for (int l = 0; l < t; ++l) {
      std::size_t digit = (term.ket >> (3 * (t - 1 - l))) & 7;
      for (int party = 0; party < 3; ++party)
        abc[static_cast<std::size_t>(party)] |=
            static_cast<int>((digit >> (2 - party)) & 1) << (t - 1 - l);
    }
    st.terms.push_back(abc);
    GhzPhase p;
    p.kind = term.sign > 0 ? GhzPhase::Kind::plus_one : GhzPhase::Kind::minus_one;
    st.phases.push_back(p);
  }
  return st;
}

GhzLikeSet to_ghzlike(const StateSet& set) {
  GhzLikeSet out;
  out.d = 1 << set.t();
  out.w = 1 << set.t();
  for (const LatticeIndex& v : set.states()) out.states.push_back(lattice_to_ghzlike(v));
  return out;
}

}  // namespace ghznl
