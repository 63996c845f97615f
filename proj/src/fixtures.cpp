#include "ghznl/fixtures.hpp"

#include <stdexcept>

namespace ghznl::fixtures {

namespace {

// diagonal with the given one-level coefficients
DiagOperator diag1(std::initializer_list<std::pair<int, Rational>> entries) {
  DiagOperator d = DiagOperator::zero(1);
  for (const auto& [i, c] : entries) d.c[static_cast<std::size_t>(i)] = c;
  return d;
}

DiagOperator proj1(int i) { return diag1({{i, Rational(1)}}); }

// i-th basis projector tensored with the {0,7} pair
DiagOperator with_pair(int i) {
  DiagOperator d = DiagOperator::zero(2);
  d.c[static_cast<std::size_t>(8 * i + 0)] = Rational(1);
  d.c[static_cast<std::size_t>(8 * i + 7)] = Rational(1);
  return d;
}

DiagOperator zero2() { return DiagOperator::zero(2); }

}  // namespace

StateSet ghz_basis() {
  std::vector<LatticeIndex> v;
  for (int i = 0; i < 8; ++i) v.push_back(LatticeIndex({i}));
  return StateSet(1, std::move(v));
}

StateSet s5() {
  std::vector<LatticeIndex> v;
  for (int i = 1; i <= 5; ++i) v.push_back(LatticeIndex({i}));
  return StateSet(1, std::move(v));
}

StateSet s10() { return extend_set_by_pair(s5(), GhzIndex(0)); }

StateSet s8() {
  std::vector<LatticeIndex> v = {
      LatticeIndex({1, 0}), LatticeIndex({2, 0}), LatticeIndex({3, 0}),
      LatticeIndex({1, 7}), LatticeIndex({2, 7}), LatticeIndex({3, 7}),
      LatticeIndex({4, 7}), LatticeIndex({5, 7}),
  };
  return StateSet(2, std::move(v));
}

StateSet s16() { return extend_set_by_pair(s8(), GhzIndex(0)); }

StateSet quad_square(const std::array<int, 4>& q) {
  std::vector<LatticeIndex> v;
  v.reserve(16);
  for (int a : q)
    for (int b : q) v.push_back(LatticeIndex({a, b}));
  return StateSet(2, std::move(v));
}

StateSet l16() { return quad_square({0, 7, 3, 4}); }

GhzLikeSet n26() {
  GhzLikeSet set;
  set.d = 3;
  set.w = 2;
  auto push = [&set](std::array<int, 3> k1, std::array<int, 3> k2) {
    for (bool minus : {false, true}) {
      GhzLikeState st;
      st.d = 3;
      st.terms = {k1, k2};
      GhzPhase plus;
      GhzPhase second;
      second.kind = minus ? GhzPhase::Kind::minus_one : GhzPhase::Kind::plus_one;
      st.phases = {plus, second};
      set.states.push_back(std::move(st));
    }
  };
  // three rotated families over (i,j) in {0,1}^2, increments mod 3
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) push({0, i, (j + 1) % 3}, {2, (i + 1) % 3, j});
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) push({(i + 1) % 3, 0, j}, {i, 2, (j + 1) % 3});
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) push({i, (j + 1) % 3, 0}, {(i + 1) % 3, j, 2});
  push({0, 0, 0}, {2, 2, 2});
  return set;
}

Certificate s5_certificate(Bipartition cut) {
  Rational h(1, 2);
  Certificate c;
  c.cut = cut;
  switch (cut) {
    case Bipartition::a_bc:
      c.y = diag1({{1, h}, {2, h}, {3, Rational(1)}, {4, Rational(1)}, {5, h}, {6, h}});
      c.qs = {proj1(5), proj1(6), DiagOperator::zero(1), DiagOperator::zero(1), proj1(1)};
      c.claimed_value = Rational(4, 5);
      break;
    case Bipartition::b_ca:
      c.y = diag1({{1, h}, {2, Rational(1)}, {3, h}, {4, h}, {5, Rational(1)}, {6, h}});
      c.qs = {proj1(4), DiagOperator::zero(1), proj1(6), proj1(1), DiagOperator::zero(1)};
      c.claimed_value = Rational(4, 5);
      break;
    case Bipartition::c_ab:
      c.y = diag1({{1, Rational(1)}, {2, h}, {3, h}, {4, h}, {5, h}});
      c.qs = {proj1(2), proj1(4), proj1(5), proj1(2), proj1(3)};
      c.claimed_value = Rational(3, 5);
      break;
  }
  return c;
}

Certificate s10_certificate(Bipartition cut) {
  return extend_certificate_by_pair(s5_certificate(cut), GhzIndex(0));
}

Certificate s8_certificate(Bipartition cut) {
  Rational h(1, 2);
  Certificate c;
  c.cut = cut;
  switch (cut) {
    case Bipartition::a_bc: {
      c.y = h * with_pair(1) + h * with_pair(2) + with_pair(3) + DiagOperator::basis(LatticeIndex({4, 7})) +
            h * with_pair(5) + h * with_pair(6);
      c.qs = {with_pair(5), with_pair(6), zero2(), with_pair(5),
              with_pair(6), zero2(),      zero2(), with_pair(1)};
      c.claimed_value = Rational(7, 8);
      break;
    }
    case Bipartition::b_ca: {
      c.y = h * with_pair(1) + with_pair(2) + h * with_pair(3) + h * with_pair(4) +
            DiagOperator::basis(LatticeIndex({5, 7})) + h * with_pair(6);
      c.qs = {with_pair(4), zero2(),      with_pair(6), with_pair(4),
              zero2(),      with_pair(6), with_pair(1), zero2()};
      c.claimed_value = Rational(7, 8);
      break;
    }
    case Bipartition::c_ab: {
      c.y = with_pair(1) + h * with_pair(2) + h * with_pair(3) + h * with_pair(4) +
            h * with_pair(5);
      c.qs = {zero2(),      with_pair(4), with_pair(5), with_pair(2),
              with_pair(4), with_pair(5), with_pair(2), with_pair(3)};
      c.claimed_value = Rational(3, 4);
      break;
    }
  }
  return c;
}

}  // namespace ghznl::fixtures
