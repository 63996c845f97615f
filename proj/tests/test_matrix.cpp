#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "ghznl/matrix.hpp"

using ghznl::GaussianRational;
using ghznl::kron;
using ghznl::ldl_factor;
using ghznl::Matrix;
using ghznl::Rational;

namespace {

GaussianRational gre(std::mt19937& gen) {
  auto part = [&gen] {
    long num = static_cast<long>(gen() % 9) - 4;
    long den = static_cast<long>(gen() % 3) + 1;
    return Rational(num, den);
  };
  return {part(), part()};
}

Matrix random_square(std::size_t n, std::uint32_t seed) {
  std::mt19937 gen(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gre(gen);
  return m;
}

// Undoes the factorization's symmetric pivoting so the product can be
// compared against the input directly.
Matrix permuted(const Matrix& m, const std::vector<std::size_t>& perm) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

Matrix diag_matrix(const std::vector<Rational>& d) {
  Matrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = GaussianRational(d[i]);
  return out;
}

}  // namespace

TEST_CASE("identity and kron behave like the textbook definitions") {
  Matrix i2 = Matrix::identity(2);
  CHECK(i2(0, 0) == GaussianRational(1));
  CHECK(i2(0, 1) == GaussianRational(0));
  CHECK(i2 * i2 == i2);

  Matrix a(2, 2);
  a(0, 0) = GaussianRational(1);
  a(0, 1) = GaussianRational(2);
  a(1, 0) = GaussianRational(3);
  a(1, 1) = GaussianRational(4);
  Matrix b(2, 2);
  b(0, 1) = GaussianRational(Rational(0), Rational(1));
  b(1, 0) = GaussianRational(Rational(0), Rational(-1));

  Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k(0, 1) == GaussianRational(Rational(0), Rational(1)));
  CHECK(k(0, 3) == GaussianRational(Rational(0), Rational(2)));
  CHECK(k(1, 0) == GaussianRational(Rational(0), Rational(-1)));
  CHECK(k(3, 2) == GaussianRational(Rational(0), Rational(-4)));
  CHECK(k(0, 0) == GaussianRational(0));

  // mixed-product property on random 2x2 blocks
  Matrix c = random_square(2, 11);
  Matrix d = random_square(2, 12);
  CHECK(kron(a * c, b * d) == kron(a, b) * kron(c, d));
}

TEST_CASE("conjugate transpose, trace, hermitian checks") {
  Matrix m = random_square(3, 21);
  Matrix h = m + m.conjugate_transpose();
  CHECK(h.is_hermitian());
  CHECK_FALSE(h.is_zero());
  CHECK(Matrix(2, 2).is_zero());
  CHECK(h.conjugate_transpose() == h);
  CHECK(h.trace().is_real());

  Matrix skew = m - m.conjugate_transpose();
  if (!skew.is_zero()) CHECK_FALSE(skew.is_hermitian());
  CHECK((skew + skew.conjugate_transpose()).is_zero());

  CHECK((m * m.conjugate_transpose()).trace().is_real());
}

TEST_CASE("ldl factorization reconstructs the permuted input exactly") {
  for (std::uint32_t seed : {31u, 32u, 33u}) {
    Matrix m = random_square(4, seed);
    Matrix h = m * m.conjugate_transpose();  // hermitian, PSD by construction
    ghznl::LdlResult f = ldl_factor(h);
    REQUIRE(f.completed);

    // L unit lower triangular, D real
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(f.l(i, i) == GaussianRational(1));
      for (std::size_t j = i + 1; j < 4; ++j) CHECK(f.l(i, j) == GaussianRational(0));
    }

    Matrix product = f.l * diag_matrix(f.d) * f.l.conjugate_transpose();
    CHECK(product == permuted(h, f.perm));
  }
}

TEST_CASE("psd test is exact") {
  // products A A^dagger are always PSD
  for (std::uint32_t seed : {41u, 42u, 43u, 44u}) {
    Matrix m = random_square(3, seed);
    CHECK(ghznl::is_psd(m * m.conjugate_transpose()));
  }

  CHECK(ghznl::is_psd(Matrix(3, 3)));          // zero matrix
  CHECK(ghznl::is_psd(Matrix::identity(3)));

  // [[0,1],[1,0]]: zero diagonal with nonzero off-diagonal, eigenvalues +-1
  Matrix x(2, 2);
  x(0, 1) = GaussianRational(1);
  x(1, 0) = GaussianRational(1);
  CHECK_FALSE(ghznl::is_psd(x));
  CHECK_FALSE(ldl_factor(x).completed);

  // [[1,1],[1,1]]: PSD with a zero pivot after elimination
  Matrix ones(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones(i, j) = GaussianRational(1);
  CHECK(ghznl::is_psd(ones));

  Matrix indef = Matrix::identity(2);
  indef(1, 1) = GaussianRational(-1);
  CHECK_FALSE(ghznl::is_psd(indef));

  // rank-one projector scaled by -1
  Matrix neg(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) neg(i, j) = GaussianRational(Rational(-1, 2));
  CHECK_FALSE(ghznl::is_psd(neg));
}

TEST_CASE("ldl rejects non-hermitian input") {
  Matrix m(2, 2);
  m(0, 1) = GaussianRational(1);
  CHECK_THROWS_AS(ldl_factor(m), std::invalid_argument);
  CHECK_THROWS_AS(ghznl::is_psd(m), std::invalid_argument);

  Matrix rect(2, 3);
  CHECK_THROWS_AS(ldl_factor(rect), std::invalid_argument);
}

TEST_CASE("matrix arithmetic shape checks") {
  Matrix a(2, 3), b(3, 2);
  Matrix p = a * b;
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(p.is_zero());

  Matrix s = GaussianRational(Rational(1, 2)) * Matrix::identity(2);
  CHECK(s(0, 0) == GaussianRational(Rational(1, 2)));
  CHECK(s + s == Matrix::identity(2));
  CHECK((s - s).is_zero());
}
