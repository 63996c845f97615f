#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghznl/rational.hpp"

namespace ghznl {

// Dense matrix over Q(i), row-major. Sized for the operators this project
// handles (up to 512 x 512); no sparsity.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
  friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& s, Matrix m);

  Matrix conjugate_transpose() const;
  GaussianRational trace() const;
  bool is_hermitian() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// P*M*P^T = L*D*L^dagger with L unit lower triangular and D real diagonal,
// produced by symmetric pivoting on the largest-magnitude diagonal entry.
// `completed` is false when the factorization hit a zero pivot whose
// remaining row was not zero (possible only for indefinite hermitian input);
// L/D/perm then hold the state up to the failing step and must not be used.
struct LdlResult {
  bool completed = false;
  std::vector<std::size_t> perm;  // P row i of PM P^T is row perm[i] of M
  Matrix l;
  std::vector<Rational> d;
};

// Requires hermitian input (throws std::invalid_argument otherwise).
LdlResult ldl_factor(const Matrix& m);

// Exact PSD test via ldl_factor: every pivot must be >= 0, and a zero pivot
// is accepted only when its entire remaining column is zero.
bool is_psd(const Matrix& m);

}  // namespace ghznl
