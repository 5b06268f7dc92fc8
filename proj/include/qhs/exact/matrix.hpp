#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qhs/exact/rational.hpp"

namespace qhs {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
    if (data_.size() != rows * cols) fail(ErrorKind::InvalidArgument, "entry count does not match dimensions");
  }
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "matrix-vector dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = BigRational(a(i, j));
  return r;
}

/// U * A * V = D with U, V unimodular. `U_inv` is kept alongside U so that
/// classes in coker(A) can be lifted back without a second inversion.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix D;

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

// Row op on the working matrix mirrored into U (left) and U_inv (right).
struct SnfState {
  IntMatrix A, U, U_inv, V;

  void row_axpy(std::size_t target, std::size_t source, const BigInt& q) {  // row_t -= q row_s
    for (std::size_t j = 0; j < A.cols(); ++j) A(target, j) -= q * A(source, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(target, j) -= q * U(source, j);
    for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, source) += q * U_inv(i, target);
  }
  void col_axpy(std::size_t target, std::size_t source, const BigInt& q) {  // col_t -= q col_s
    for (std::size_t i = 0; i < A.rows(); ++i) A(i, target) -= q * A(i, source);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, target) -= q * V(i, source);
  }
  void row_swap(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = -A(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
    for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) = -U_inv(i, r);
  }
};

}  // namespace detail

/// Smith normal form with the smallest-absolute-value pivot strategy.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  detail::SnfState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()),
                     IntMatrix::identity(a.cols())};
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s.A(i, j) == 0) continue;
          if (!best || abs(s.A(i, j)) < abs(s.A(best->first, best->second))) best = {{i, j}};
        }
      if (!best) break;
      s.row_swap(t, best->first);
      s.col_swap(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.A(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s.A(i, t).get_mpz_t(), s.A(t, t).get_mpz_t());
        s.row_axpy(i, t, q);
        if (s.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.A(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), s.A(t, j).get_mpz_t(), s.A(t, t).get_mpz_t());
        s.col_axpy(j, t, q);
        if (s.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility chain: fold an offending row into the pivot row
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s.A(i, j).get_mpz_t(), s.A(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.row_axpy(t, *offender, BigInt(-1));
    }
    if (s.A(t, t) < 0) s.row_negate(t);
  }
  return {std::move(s.U), std::move(s.U_inv), std::move(s.V), std::move(s.A)};
}

/// Bareiss fraction-free elimination without pivoting. Returns the leading
/// principal minors det(A[0..k, 0..k]) for k = 0.. until the first zero one
/// (inclusive); for a matrix whose minors are all nonzero this is all of them.
inline std::vector<BigInt> leading_principal_minors(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::InvalidArgument, "minors need a square matrix");
  IntMatrix m = a;
  const std::size_t n = m.rows();
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m(k, k));
    if (m(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return minors;
}

/// Exact determinant (Bareiss with row pivoting).
inline BigInt determinant(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::InvalidArgument, "determinant needs a square matrix");
  IntMatrix m = a;
  const std::size_t n = m.rows();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Gauss-Jordan over Q.
inline RatMatrix invert_rational_matrix(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::InvalidArgument, "inverse needs a square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = to_rational(a);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) fail(ErrorKind::SingularMatrix, "determinant is zero");
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    BigRational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      BigRational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace qhs
