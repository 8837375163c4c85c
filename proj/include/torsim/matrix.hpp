#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices and exact integer normal forms.
 *
 * smith_normal_form works over any integer type with checked arithmetic;
 * the 64-bit instantiation throws OverflowError, and smith_checked() retries
 * such inputs with arbitrary precision.
 */

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "torsim/integer.hpp"

namespace torsim {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix from nested rows; all rows must share one length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("column of wrong length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns of *this followed by the columns of other.
  Matrix hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw InputError("hconcat: row counts differ");
    Matrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw InputError("matrix-vector product: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

class OverflowError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer neg(const Integer& a) { return -a; }

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow");
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow");
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == INT64_MIN) throw OverflowError("int64 overflow");
  return -a;
}

template <class T>
T abs(const T& a) {
  return a < 0 ? neg(a) : a;
}

}  // namespace checked

/// U * A * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... >= 0.
/// The inverses of U and V are carried along so that coordinates can be
/// mapped in both directions.
template <class T>
struct SmithForm {
  Matrix<T> U, D, V, U_inv, V_inv;
  std::size_t rank = 0;
  /// Diagonal entries, one per row of A (0 beyond the rank).
  std::vector<T> diagonal() const {
    std::vector<T> d(D.rows(), T(0));
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d[i] = D(i, i);
    return d;
  }
};

template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm<T> s{Matrix<T>::identity(m), A, Matrix<T>::identity(n), Matrix<T>::identity(m), Matrix<T>::identity(n), 0};
  auto& D = s.D;

  // Row op: row_i += c * row_j (on D and U); inverse bookkeeping on U_inv.
  auto row_add = [&](std::size_t i, std::size_t j, const T& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < n; ++k) D(i, k) = checked::add(D(i, k), checked::mul(c, D(j, k)));
    for (std::size_t k = 0; k < m; ++k) s.U(i, k) = checked::add(s.U(i, k), checked::mul(c, s.U(j, k)));
    for (std::size_t k = 0; k < m; ++k) s.U_inv(k, j) = checked::add(s.U_inv(k, j), checked::neg(checked::mul(c, s.U_inv(k, i))));
  };
  auto col_add = [&](std::size_t i, std::size_t j, const T& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < m; ++k) D(k, i) = checked::add(D(k, i), checked::mul(c, D(k, j)));
    for (std::size_t k = 0; k < n; ++k) s.V(k, i) = checked::add(s.V(k, i), checked::mul(c, s.V(k, j)));
    for (std::size_t k = 0; k < n; ++k) s.V_inv(j, k) = checked::add(s.V_inv(j, k), checked::neg(checked::mul(c, s.V_inv(i, k))));
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    s.U.swap_rows(i, j);
    s.U_inv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    s.V.swap_cols(i, j);
    s.V_inv.swap_rows(i, j);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) D(i, k) = checked::neg(D(i, k));
    for (std::size_t k = 0; k < m; ++k) s.U(i, k) = checked::neg(s.U(i, k));
    for (std::size_t k = 0; k < m; ++k) s.U_inv(k, i) = checked::neg(s.U_inv(k, i));
  };

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    T best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (D(i, j) == 0) continue;
        T a = checked::abs(D(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        T q = D(i, t) / D(t, t);
        row_add(i, t, checked::neg(q));
        if (D(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        T q = D(t, j) / D(t, t);
        col_add(j, t, checked::neg(q));
        if (D(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into the pivot row.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, T(1));
            clean = false;
            break;
          }
        }
    }
    if (D(t, t) < 0) row_negate(t);
    ++t;
  }
  s.rank = t;
  return s;
}

inline Matrix<std::int64_t> to_int64(const IntMatrix& a) {
  Matrix<std::int64_t> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = torsim::to_int64(a(i, j));
  return r;
}

inline IntMatrix to_integer(const Matrix<std::int64_t>& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

inline SmithForm<Integer> to_integer(const SmithForm<std::int64_t>& s) {
  return {to_integer(s.U), to_integer(s.D), to_integer(s.V), to_integer(s.U_inv), to_integer(s.V_inv), s.rank};
}

/// Smith form of an integer matrix, computed in 64-bit words when the
/// intermediate values allow it and in arbitrary precision otherwise.
inline SmithForm<Integer> smith_checked(const IntMatrix& A) {
  bool small = std::all_of(A.data().begin(), A.data().end(),
                           [](const Integer& v) { return abs_value(v) < (Integer(1) << 30); });
  if (small) {
    try {
      return to_integer(smith_normal_form(to_int64(A)));
    } catch (const OverflowError&) {
    }
  }
  return smith_normal_form(A);
}

/// Canonical basis of the lattice spanned by the given vectors: the nonzero
/// rows of the row-style Hermite normal form (positive pivots, entries above
/// each pivot reduced into [0, pivot)). Two spanning sets give the same
/// output iff they span the same lattice.
inline std::vector<std::vector<Integer>> hermite_basis(std::vector<std::vector<Integer>> rows, std::size_t dim) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < dim && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows >= pivot_row.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs_value(rows[r][c]) < abs_value(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool others = false;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q = rows[r][c] / rows[pivot_row][c];
        for (std::size_t k = c; k < dim; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (pivot_row >= rows.size() || rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& v : rows[pivot_row]) v = -v;
    const Integer piv = rows[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = div_floor(rows[r][c], piv);
      if (q != 0)
        for (std::size_t k = c; k < dim; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

/// Basis of {v : A v = 0} over Z, as columns.
inline IntMatrix integer_kernel(const IntMatrix& A) {
  auto s = smith_checked(A);
  IntMatrix K(A.cols(), A.cols() - s.rank);
  for (std::size_t j = s.rank; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.cols(); ++i) K(i, j - s.rank) = s.V(i, j);
  return K;
}

inline Integer determinant_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InputError("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace torsim
