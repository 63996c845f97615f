#include <doctest.h>

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ghznl/ghz.hpp"

using namespace ghznl;

namespace {

Rational half() { return Rational(1, 2); }

DiagOperator random_diag(int t, std::uint32_t seed) {
  std::mt19937 gen(seed);
  DiagOperator d = DiagOperator::zero(t);
  for (auto& c : d.c) {
    long num = static_cast<long>(gen() % 9) - 4;
    long den = static_cast<long>(gen() % 3) + 1;
    c = Rational(num, den);
  }
  return d;
}

DenseOperator random_hermitian_dense(int t, std::uint32_t seed) {
  std::mt19937 gen(seed);
  const std::size_t n = std::size_t{1} << (3 * t);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long a = static_cast<long>(gen() % 9) - 4;
      long b = static_cast<long>(gen() % 9) - 4;
      m(i, j) = GaussianRational(Rational(a, 2), Rational(b, 2));
    }
  return DenseOperator{t, m + m.conjugate_transpose()};
}

}  // namespace

TEST_CASE("basis indices pair up by bit pattern and sign") {
  // i <= 3 carries bit pattern i with sign +, index 7-i the same pattern with -
  for (int v = 0; v < 8; ++v) {
    GhzIndex g(v);
    CHECK(g.value() == v);
    CHECK(g.bits() == (v < 4 ? v : 7 - v));
    CHECK(g.partner_bits() == 7 - g.bits());
    CHECK(g.sign() == (v < 4 ? 1 : -1));
    CHECK(g.bits() < 4);  // representative ket has A-bit 0
  }
  CHECK(GhzIndex(2) == GhzIndex(2));
  CHECK(GhzIndex(2) != GhzIndex(5));
  CHECK(GhzIndex(2) < GhzIndex(5));
  CHECK_THROWS_AS(GhzIndex(8), std::invalid_argument);
  CHECK_THROWS_AS(GhzIndex(-1), std::invalid_argument);
}

TEST_CASE("lattice indices rank-round-trip in base 8") {
  for (std::uint64_t r = 0; r < 64; ++r) {
    LatticeIndex v = LatticeIndex::from_rank(2, r);
    CHECK(v.t() == 2);
    CHECK(v.rank() == r);
  }
  LatticeIndex v{1, 5};
  CHECK(v.rank() == 13);  // level 0 is the most significant digit
  CHECK(v[0] == GhzIndex(1));
  CHECK(v[1] == GhzIndex(5));
  CHECK(v.str() == "(1,5)");
  CHECK(LatticeIndex{3}.str() == "(3)");
  CHECK(LatticeIndex{1}.extended(GhzIndex(5)) == v);

  CHECK_THROWS_AS(LatticeIndex(std::vector<GhzIndex>{}), std::invalid_argument);
  CHECK_THROWS_AS(LatticeIndex::from_rank(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(LatticeIndex::from_rank(0, 0), std::invalid_argument);
}

TEST_CASE("basis vector expansions in the computational basis") {
  // index 0: (|000> + |111>)/sqrt(2)
  auto t0 = lattice_terms(LatticeIndex{0});
  REQUIRE(t0.size() == 2);
  CHECK(t0[0].ket == 0);
  CHECK(t0[0].sign == 1);
  CHECK(t0[1].ket == 7);
  CHECK(t0[1].sign == 1);

  // index 5: (|010> - |101>)/sqrt(2)
  auto t5 = lattice_terms(LatticeIndex{5});
  REQUIRE(t5.size() == 2);
  CHECK(t5[0].ket == 2);
  CHECK(t5[0].sign == 1);
  CHECK(t5[1].ket == 5);
  CHECK(t5[1].sign == -1);

  // two levels multiply out, level 0 in the high octal digit
  auto t05 = lattice_terms(LatticeIndex{0, 5});
  REQUIRE(t05.size() == 4);
  CHECK(t05[0].ket == 2);
  CHECK(t05[0].sign == 1);
  CHECK(t05[1].ket == 5);
  CHECK(t05[1].sign == -1);
  CHECK(t05[2].ket == 58);
  CHECK(t05[2].sign == 1);
  CHECK(t05[3].ket == 61);
  CHECK(t05[3].sign == -1);
}

TEST_CASE("projector densities match hand expansion") {
  DenseOperator p0 = ghz_density(GhzIndex(0));
  REQUIRE(p0.m.rows() == 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      bool corner = (i == 0 || i == 7) && (j == 0 || j == 7);
      CHECK(p0.m(i, j) == (corner ? GaussianRational(half()) : GaussianRational(0)));
    }

  DenseOperator p5 = ghz_density(GhzIndex(5));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      GaussianRational want(0);
      if ((i == 2 && j == 2) || (i == 5 && j == 5)) want = GaussianRational(half());
      if ((i == 2 && j == 5) || (i == 5 && j == 2)) want = GaussianRational(-half());
      CHECK(p5.m(i, j) == want);
    }

  CHECK(p0.m.trace() == GaussianRational(1));
  CHECK(p0.m * p0.m == p0.m);
  CHECK((p0.m * p5.m).is_zero());  // orthogonal projectors

  DiagOperator d = DiagOperator::basis(LatticeIndex{0});
  CHECK(dense_from_diag(d).m == p0.m);
  CHECK(lattice_density(LatticeIndex{5}).m == p5.m);

  // dense operators stop at 3 levels
  CHECK_THROWS_AS(lattice_density(LatticeIndex{0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("dephasing group eigenvalue table") {
  const auto& group = dephasing_group();
  const char* names[8] = {"III", "XXX", "IZZ", "ZIZ", "ZZI", "XYY", "YXY", "YYX"};
  // rows follow the group order above, columns are basis indices 0..7
  const int table[8][8] = {
      {+1, +1, +1, +1, +1, +1, +1, +1},  // III
      {+1, +1, +1, +1, -1, -1, -1, -1},  // XXX
      {+1, -1, -1, +1, +1, -1, -1, +1},  // IZZ
      {+1, -1, +1, -1, -1, +1, -1, +1},  // ZIZ
      {+1, +1, -1, -1, -1, -1, +1, +1},  // ZZI
      {-1, +1, +1, -1, +1, -1, -1, +1},  // XYY
      {-1, +1, -1, +1, -1, +1, -1, +1},  // YXY
      {-1, -1, +1, +1, -1, -1, +1, +1},  // YYX
  };
  for (std::size_t g = 0; g < 8; ++g) {
    CHECK(group[g].str() == names[g]);
    for (int i = 0; i < 8; ++i) CHECK(dephasing_sign(group[g], GhzIndex(i)) == table[g][i]);
  }
}

TEST_CASE("transform tables match their defining quadruples") {
  struct Expected {
    Bipartition cut;
    std::array<std::array<int, 4>, 2> quads;
  };
  const Expected expected[3] = {
      {Bipartition::a_bc, {{{0, 7, 3, 4}, {1, 6, 2, 5}}}},
      {Bipartition::b_ca, {{{0, 7, 2, 5}, {3, 4, 1, 6}}}},
      {Bipartition::c_ab, {{{0, 7, 1, 6}, {2, 5, 3, 4}}}},
  };

  for (const Expected& e : expected) {
    const auto& quads = pt_quadruples(e.cut);
    for (int q = 0; q < 2; ++q)
      for (int a = 0; a < 4; ++a)
        CHECK(quads[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)] ==
              GhzIndex(e.quads[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)]));

    // build the full 8x8 from the quadruples: within a class the entry is
    // +1/2 except -1/2 on the anti-diagonal of the 4x4 block; zero across
    std::array<std::array<Rational, 8>, 8> want{};
    for (int q = 0; q < 2; ++q)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          auto i = static_cast<std::size_t>(e.quads[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)]);
          auto j = static_cast<std::size_t>(e.quads[static_cast<std::size_t>(q)][static_cast<std::size_t>(b)]);
          want[i][j] = a + b == 3 ? -half() : half();
        }

    const PtTransform& tr = pt_transform(e.cut);
    CHECK(tr.cut == e.cut);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(tr.m[i][j] == want[i][j]);
  }
}

TEST_CASE("transform tables agree with the dense partial transpose") {
  for (Bipartition cut : all_bipartitions) {
    const PtTransform& tr = pt_transform(cut);
    for (int j = 0; j < 8; ++j) {
      DenseOperator moved = partial_transpose_dense(ghz_density(GhzIndex(j)), cut);
      auto [diag, offdiag_zero] = expand_in_ghz_basis(moved);
      CHECK(offdiag_zero);  // transform closes over the diagonal span
      for (std::size_t i = 0; i < 8; ++i)
        CHECK(diag.c[i] == tr.m[i][static_cast<std::size_t>(j)]);
    }

    // symmetric, involutive, stochastic columns
    for (std::size_t i = 0; i < 8; ++i) {
      Rational colsum(0);
      for (std::size_t j = 0; j < 8; ++j) {
        CHECK(tr.m[i][j] == tr.m[j][i]);
        Rational entry(0);
        for (std::size_t k = 0; k < 8; ++k) entry += tr.m[i][k] * tr.m[k][j];
        CHECK(entry == (i == j ? Rational(1) : Rational(0)));
        colsum += tr.m[j][i];
      }
      CHECK(colsum == Rational(1));
    }
  }
}

TEST_CASE("dense partial transpose is an involution") {
  DenseOperator rho = random_hermitian_dense(1, 777);
  for (Bipartition cut : all_bipartitions) {
    DenseOperator once = partial_transpose_dense(rho, cut);
    CHECK(once.m.is_hermitian());
    CHECK(once.m.trace() == rho.m.trace());
    DenseOperator twice = partial_transpose_dense(once, cut);
    CHECK(twice.m == rho.m);
  }
}

TEST_CASE("level-wise transform equals the dense route at two levels") {
  for (Bipartition cut : all_bipartitions)
    for (std::uint32_t seed : {900u, 901u}) {
      DiagOperator d = random_diag(2, seed + static_cast<std::uint32_t>(cut) * 16);
      DenseOperator moved = partial_transpose_dense(dense_from_diag(d), cut);
      auto [viadense, offdiag_zero] = expand_in_ghz_basis(moved);
      CHECK(offdiag_zero);
      CHECK(apply_pt_diag(d, cut) == viadense);
    }
}

TEST_CASE("dephasing projects onto the lattice diagonal") {
  DenseOperator rho = random_hermitian_dense(1, 4242);
  DenseOperator fixed = dephase(rho);
  CHECK(fixed.m.is_hermitian());
  CHECK(fixed.m.trace() == rho.m.trace());
  CHECK(dephase(fixed).m == fixed.m);  // idempotent

  auto [diag, offdiag_zero] = expand_in_ghz_basis(rho);
  CHECK(fixed.m == dense_from_diag(diag).m);  // exact diagonal part
  CHECK_FALSE(offdiag_zero);  // a random operator is not already diagonal

  // diagonal operators are fixed points
  DiagOperator d = random_diag(1, 4343);
  DenseOperator dd = dense_from_diag(d);
  CHECK(dephase(dd).m == dd.m);
  auto [back, zero2] = expand_in_ghz_basis(dd);
  CHECK(zero2);
  CHECK(back == d);

  // the projection commutes with the partial transpose
  for (Bipartition cut : all_bipartitions)
    CHECK(dephase(partial_transpose_dense(rho, cut)).m ==
          partial_transpose_dense(dephase(rho), cut).m);
}

TEST_CASE("off-diagonal detection in the expansion") {
  // |000><111| + |111><000| lies inside the diagonal span: it equals the
  // difference of the two projectors sharing that bit pair
  Matrix m(8, 8);
  m(0, 7) = GaussianRational(1);
  m(7, 0) = GaussianRational(1);
  auto [diag, inside] = expand_in_ghz_basis(DenseOperator{1, m});
  CHECK(inside);
  CHECK(diag.c[0] == Rational(1));
  CHECK(diag.c[7] == Rational(-1));
  for (std::size_t i = 1; i < 7; ++i) CHECK(diag.c[i] == Rational(0));

  // |000><001| + |001><000| is orthogonal to every basis projector
  Matrix n(8, 8);
  n(0, 1) = GaussianRational(1);
  n(1, 0) = GaussianRational(1);
  auto [diag2, inside2] = expand_in_ghz_basis(DenseOperator{1, n});
  CHECK_FALSE(inside2);
  for (std::size_t i = 0; i < 8; ++i) CHECK(diag2.c[i] == Rational(0));

  // non-real diagonal coefficient is rejected
  Matrix bad(8, 8);
  bad(0, 7) = GaussianRational::i();
  bad(7, 0) = GaussianRational::i();
  CHECK_THROWS_AS(expand_in_ghz_basis(DenseOperator{1, bad}), std::invalid_argument);
}

TEST_CASE("diagonal operator arithmetic") {
  DiagOperator a = random_diag(1, 71);
  DiagOperator b = random_diag(1, 72);
  CHECK((a + b) - b == a);
  CHECK((a + b).trace() == a.trace() + b.trace());
  CHECK((Rational(2) * a).trace() == Rational(2) * a.trace());

  DiagOperator basis0 = DiagOperator::basis(LatticeIndex{0});
  CHECK(basis0.trace() == Rational(1));
  CHECK(basis0.entrywise_nonneg());
  CHECK(basis0.dim() == 8);

  DiagOperator prod = basis0.tensor(DiagOperator::basis(LatticeIndex{5}));
  CHECK(prod.t == 2);
  CHECK(prod.dim() == 64);
  CHECK(prod == DiagOperator::basis(LatticeIndex{0, 5}));

  DiagOperator two = DiagOperator::zero(2);
  CHECK_THROWS_AS(a += two, std::invalid_argument);
  CHECK_THROWS_AS(DiagOperator::zero(0), std::invalid_argument);
}

TEST_CASE("bipartition names round-trip") {
  CHECK(to_string(Bipartition::a_bc) == "A|BC");
  CHECK(to_string(Bipartition::b_ca) == "B|CA");
  CHECK(to_string(Bipartition::c_ab) == "C|AB");
  for (Bipartition cut : all_bipartitions) {
    auto parsed = parse_bipartition(to_string(cut));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == cut);
  }
  CHECK_FALSE(parse_bipartition("AB|C").has_value());
  CHECK_FALSE(parse_bipartition("").has_value());
}
