#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz {

/// m×n matrix constant along diagonals: entry (p,q) = diag[q - p + m - 1].
class ToeplitzMatrix {
 public:
  ToeplitzMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> diag)
      : rows_(rows), cols_(cols), diag_(std::move(diag)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::shape_mismatch, "empty Toeplitz matrix");
    if (diag_.size() != rows + cols - 1)
      throw Error(ErrorCode::shape_mismatch, "Toeplitz diagonal sequence has the wrong length");
  }

  /// Checks that the dense matrix is constant along every diagonal.
  static ToeplitzMatrix from_dense(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorCode::shape_mismatch, "empty Toeplitz matrix");
    std::vector<Rational> diag(m.rows() + m.cols() - 1);
    for (std::size_t p = 0; p < m.rows(); ++p)
      for (std::size_t q = 0; q < m.cols(); ++q) {
        const std::size_t k = q + m.rows() - 1 - p;
        if (p == 0 || q == 0) diag[k] = m(p, q);
        else if (m(p, q) != diag[k])
          throw Error(ErrorCode::invalid_argument, "matrix is not Toeplitz");
      }
    return ToeplitzMatrix(m.rows(), m.cols(), std::move(diag));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Rational>& diag() const noexcept { return diag_; }

  const Rational& operator()(std::size_t p, std::size_t q) const { return diag_[q + rows_ - 1 - p]; }

  Matrix dense() const {
    Matrix m(rows_, cols_);
    for (std::size_t p = 0; p < rows_; ++p)
      for (std::size_t q = 0; q < cols_; ++q) m(p, q) = (*this)(p, q);
    return m;
  }

  friend bool operator==(const ToeplitzMatrix&, const ToeplitzMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> diag_;
};

/// φ^i_d(F): the (i+1)×(d-i+1) Toeplitz matrix with entry (p,q) = c_{i+q-p}.
/// Its diagonal sequence is exactly c_0..c_d.
inline ToeplitzMatrix phi(const BivariateForm& f, int i) {
  const int d = f.degree();
  if (i < 0 || 2 * i > d) {
    throw Error(ErrorCode::index_out_of_range,
                "order " + std::to_string(i) + " outside 0.." + std::to_string(d / 2));
  }
  return ToeplitzMatrix(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(d - i) + 1, f.coeffs());
}

inline BivariateForm phi_inverse(const ToeplitzMatrix& m, int d) {
  if (static_cast<long>(m.rows() + m.cols()) - 2 != d || 2 * (static_cast<long>(m.rows()) - 1) > d) {
    throw Error(ErrorCode::shape_mismatch, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                               " is not the shape of phi^i_" + std::to_string(d));
  }
  return BivariateForm(m.diag());
}

/// Options for exhaustive minor enumeration. The cost grows like
/// C(m+n, min(m,n)); inputs with min(m,n) above `max_order` are refused.
struct MinorOptions {
  std::size_t max_order = 12;
};

namespace detail {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
inline bool for_each_subset(std::size_t n, std::size_t k,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return true;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

inline std::vector<std::size_t> consecutive(std::size_t start, std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t j = 0; j < k; ++j) v[j] = start + j;
  return v;
}

inline void check_order(const Matrix& m, const MinorOptions& opts) {
  if (std::min(m.rows(), m.cols()) > opts.max_order) {
    throw Error(ErrorCode::budget_exhausted,
                "minor enumeration refused: min(rows, cols) = " +
                    std::to_string(std::min(m.rows(), m.cols())) + " exceeds the cap " +
                    std::to_string(opts.max_order));
  }
}

inline Verdict failing(std::string property, std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                       Rational value) {
  Verdict v{std::move(property), false, {}, {}, {}, {}};
  v.witness = MinorWitness{std::move(rows), std::move(cols), std::move(value)};
  return v;
}

}  // namespace detail

/// True iff every consecutive minor is positive. The first failing minor
/// (by size, then row start, then column start) is reported.
inline Verdict consecutive_minors_positive(const Matrix& m) {
  detail::ScaledIntegerMatrix scaled(m);
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k)
    for (std::size_t r = 0; r + k <= m.rows(); ++r)
      for (std::size_t s = 0; s + k <= m.cols(); ++s) {
        auto rows = detail::consecutive(r, k);
        auto cols = detail::consecutive(s, k);
        if (sgn(detail::integer_minor(scaled, rows, cols)) <= 0) {
          return detail::failing("TP", rows, cols, detail::rational_minor(scaled, rows, cols));
        }
      }
  return Verdict{"TP", true, {}, {}, {}, {}};
}

/// Total positivity through Fekete's criterion: consecutive minors suffice.
inline Verdict is_totally_positive(const Matrix& m) { return consecutive_minors_positive(m); }

inline Verdict is_totally_positive(const ToeplitzMatrix& m) { return is_totally_positive(m.dense()); }

namespace detail {

// Exhaustive scan; `bad(sign)` flags a failing minor.
inline Verdict scan_all_minors(const Matrix& m, const MinorOptions& opts, const std::string& property,
                               const std::function<bool(int)>& bad) {
  check_order(m, opts);
  ScaledIntegerMatrix scaled(m);
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::optional<Verdict> found;
  for (std::size_t k = 1; k <= kmax && !found; ++k) {
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (bad(sgn(integer_minor(scaled, rows, cols)))) {
          found = failing(property, rows, cols, rational_minor(scaled, rows, cols));
          return false;
        }
        return true;
      });
    });
  }
  if (found) return *found;
  return Verdict{property, true, {}, {}, {}, {}};
}

}  // namespace detail

/// Total positivity by enumerating every minor; the cross-validation oracle
/// for the consecutive-minor test.
inline Verdict is_totally_positive_exhaustive(const Matrix& m, const MinorOptions& opts = {}) {
  return detail::scan_all_minors(m, opts, "TP", [](int s) { return s <= 0; });
}

/// Total nonnegativity. Consecutive minors do not suffice here, so every
/// minor is enumerated; a negative entry fails immediately.
inline Verdict is_totally_nonnegative(const Matrix& m, const MinorOptions& opts = {}) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) < 0) return detail::failing("TN", {r}, {c}, m(r, c));
  return detail::scan_all_minors(m, opts, "TN", [](int s) { return s < 0; });
}

inline Verdict is_totally_nonnegative(const ToeplitzMatrix& m, const MinorOptions& opts = {}) {
  return is_totally_nonnegative(m.dense(), opts);
}

inline std::size_t rank(const ToeplitzMatrix& m) { return rank(m.dense()); }

}  // namespace lorentz
