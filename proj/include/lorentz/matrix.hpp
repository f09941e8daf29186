#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::shape_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::shape_mismatch, "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

inline Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::shape_mismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

inline Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

/// Reverses the row order (left multiplication by the anti-diagonal permutation).
inline Matrix reverse_rows(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(m.rows() - 1 - r, c);
  return out;
}

inline bool is_symmetric(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

namespace detail {

// Integer image of a rational matrix: row r is multiplied by the lcm of its
// denominators. Minors of the integer matrix differ from the rational ones by
// the (positive) product of the chosen row scales.
struct ScaledIntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;
  std::vector<Integer> row_scale;

  explicit ScaledIntegerMatrix(const Matrix& m)
      : rows(m.rows()), cols(m.cols()), entries(m.rows() * m.cols()), row_scale(m.rows(), 1) {
    for (std::size_t r = 0; r < rows; ++r) {
      Integer l = 1;
      for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
      row_scale[r] = l;
      for (std::size_t c = 0; c < cols; ++c)
        entries[r * cols + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }

  const Integer& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Bareiss fraction-free elimination on a square integer work array (row-major).
inline Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Integer det = a[n * n - 1];
  if (sign < 0) det = -det;
  return det;
}

// Determinant of the integer minor on (rows, cols), without row scaling.
inline Integer integer_minor(const ScaledIntegerMatrix& m, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  std::vector<Integer> work(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) work[r * k + c] = m.at(rows[r], cols[c]);
  return bareiss_determinant(std::move(work), k);
}

inline Rational rational_minor(const ScaledIntegerMatrix& m, std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) {
  Integer scale = 1;
  for (auto r : rows) scale *= m.row_scale[r];
  Rational out(integer_minor(m, rows, cols), scale);
  out.canonicalize();
  return out;
}

}  // namespace detail

/// Exact determinant by Bareiss elimination on the integer-rescaled rows.
inline Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "determinant of non-square matrix");
  detail::ScaledIntegerMatrix scaled(m);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return detail::rational_minor(scaled, idx, idx);
}

/// Determinant of the minor M_{rows, cols}.
inline Rational minor(const Matrix& m, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
  return determinant(submatrix(m, rows, cols));
}

/// Exact rank via fraction-free elimination with column skipping.
inline std::size_t rank(const Matrix& m) {
  detail::ScaledIntegerMatrix scaled(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Integer> a = scaled.entries;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a[r * nc + j], a[piv * nc + j]);
    const Integer pivot = a[r * nc + c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = a[i * nc + j] * pivot - a[i * nc + c] * a[r * nc + j];
        mpz_divexact(a[i * nc + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * nc + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

/// Reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right kernel, one vector per free column in increasing order.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  Matrix work = m;
  auto pivots = row_reduce(work);
  std::vector<std::vector<Rational>> basis;
  std::size_t pi = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (pi < pivots.size() && pivots[pi] == free) {
      ++pi;
      continue;
    }
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Text form `a,b,c; d,e,f` (rows separated by `;`).
inline Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  for (auto row_text : detail::split(detail::trim(text), ';')) {
    if (detail::trim(row_text).empty()) continue;
    rows.push_back(parse_rational_list(row_text));
  }
  if (rows.empty()) throw Error(ErrorCode::parse_error, "empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::parse_error, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

inline std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_string(m(r, c));
    }
  }
  return out;
}

}  // namespace lorentz
