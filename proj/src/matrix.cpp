#include "ghznl/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ghznl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator*(const GaussianRational& s, Matrix m) {
  for (auto& v : m.e_) v *= s;
  return m;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_real()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i).conj()) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const GaussianRational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const GaussianRational& bkl = b(k, l);
          if (!bkl.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return c;
}

LdlResult ldl_factor(const Matrix& m) {
  if (!m.is_hermitian()) throw std::invalid_argument("ldl_factor: matrix not hermitian");
  const std::size_t n = m.rows();
  Matrix a = m;  // working copy, lower triangle is authoritative
  LdlResult res;
  res.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.perm[i] = i;
  res.l = Matrix::identity(n);
  res.d.assign(n, Rational(0));

  auto swap_sym = [&](std::size_t k, std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(res.perm[p], res.perm[q]);
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    // only the L columns built so far move with the rows; the unit diagonal
    // and unfactored columns stay put
    for (std::size_t j = 0; j < k; ++j) std::swap(res.l(p, j), res.l(q, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    Rational best_abs = abs(a(k, k).re);
    for (std::size_t p = k + 1; p < n; ++p) {
      Rational cand = abs(a(p, p).re);
      if (cand > best_abs) {
        best = p;
        best_abs = cand;
      }
    }
    swap_sym(k, k, best);

    Rational pivot = a(k, k).re;
    res.d[k] = pivot;
    if (pivot.is_zero()) {
      for (std::size_t i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) return res;  // completed stays false
      continue;  // L column is e_k, move on
    }
    GaussianRational pd{pivot};
    for (std::size_t i = k + 1; i < n; ++i) {
      GaussianRational lik = a(i, k) / pd;
      res.l(i, k) = lik;
      if (lik.is_zero()) continue;
      for (std::size_t j = k + 1; j <= i; ++j) {
        GaussianRational ljk = res.l(j, k);
        if (!ljk.is_zero()) a(i, j) -= lik * ljk.conj() * pd;
      }
    }
    // keep the upper triangle consistent for the diagonal search above
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < i; ++j) a(j, i) = a(i, j).conj();
  }
  res.completed = true;
  return res;
}

bool is_psd(const Matrix& m) {
  LdlResult f = ldl_factor(m);
  if (!f.completed) return false;  // zero pivot with nonzero column below it
  for (const Rational& d : f.d)
    if (d.sign() < 0) return false;
  return true;
}

}  // namespace ghznl
