#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Hankel data of the i-th Hessian of a degree-d form in the monomial basis
/// {x^p y^(i-p)}: base[m](p,q) = c_{m+p+q} for m = 0..d-2i.
///
/// Hess_i at (a,b)        = (d)_{2i} * sum_m C(d-2i, m) a^m b^(d-2i-m) base[m]
/// MHess_i at (a_k, b_k)  = d! * sum_m w_m base[m],  w_m = [z^m] prod_k (a_k z + b_k)
///
/// For i > s(F)-1 the monomials no longer form a basis of (A_F)_i and these
/// are the extended Hessians; the formulas are unchanged.
struct HessianSpec {
  int degree = 0;
  int index = 0;
  std::vector<Matrix> base;
  Integer scale_ordinary;
  Integer scale_mixed;
};

inline HessianSpec hessian_spec(const BivariateForm& f, int i) {
  const int d = f.degree();
  if (i < 0 || 2 * i > d) {
    throw Error(ErrorCode::index_out_of_range,
                "Hessian index " + std::to_string(i) + " outside 0.." + std::to_string(d / 2));
  }
  HessianSpec spec;
  spec.degree = d;
  spec.index = i;
  spec.scale_ordinary = falling_factorial(d, 2 * i);
  spec.scale_mixed = factorial(d);
  const std::size_t n = static_cast<std::size_t>(i) + 1;
  for (int m = 0; m <= d - 2 * i; ++m) {
    Matrix h(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) h(p, q) = f.coeffs()[m + p + q];
    spec.base.push_back(std::move(h));
  }
  return spec;
}

inline Matrix eval_hessian(const HessianSpec& spec, const Rational& a, const Rational& b) {
  const int s = spec.degree - 2 * spec.index;
  const std::size_t n = static_cast<std::size_t>(spec.index) + 1;
  Matrix out(n, n);
  for (int m = 0; m <= s; ++m) {
    Rational w = Rational(binomial(s, m)) * power(a, m) * power(b, s - m);
    if (w == 0) continue;
    out = out + w * spec.base[m];
  }
  return Rational(spec.scale_ordinary) * out;
}

/// Coefficients of z^0..z^s in prod_k (a_k z + b_k): the elementary
/// symmetric mixing weights.
inline std::vector<Rational> mixing_weights(std::span<const LinearForm> points) {
  std::vector<Rational> w{1};
  for (const auto& pt : points) {
    std::vector<Rational> next(w.size() + 1);
    for (std::size_t m = 0; m < w.size(); ++m) {
      next[m] += w[m] * pt.b;
      next[m + 1] += w[m] * pt.a;
    }
    w = std::move(next);
  }
  return w;
}

inline Matrix eval_mixed_hessian(const HessianSpec& spec, std::span<const LinearForm> points) {
  const int s = spec.degree - 2 * spec.index;
  if (static_cast<int>(points.size()) != s) {
    throw Error(ErrorCode::shape_mismatch, "mixed Hessian of index " + std::to_string(spec.index) +
                                               " needs " + std::to_string(s) + " points, got " +
                                               std::to_string(points.size()));
  }
  const auto w = mixing_weights(points);
  const std::size_t n = static_cast<std::size_t>(spec.index) + 1;
  Matrix out(n, n);
  for (int m = 0; m <= s; ++m) {
    if (w[m] == 0) continue;
    out = out + w[m] * spec.base[m];
  }
  return Rational(spec.scale_mixed) * out;
}

/// det(P M) where P reverses the row order: (-1)^floor(n/2) det(M).
inline Rational permuted_det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "permuted determinant of a non-square matrix");
  Rational det = determinant(m);
  return (m.rows() / 2) % 2 == 0 ? det : Rational(-det);
}

/// Inertia (n_+, n_0, n_-) of a symmetric matrix.
struct SignatureReport {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

/// Exact inertia by symmetric congruence elimination. A nonzero diagonal
/// entry is used as a 1×1 pivot; otherwise the first nonzero off-diagonal
/// entry (r,s) gives a 2×2 pivot [[0,x],[x,0]], which contributes one
/// positive and one negative direction.
inline SignatureReport signature(const Matrix& input) {
  if (!is_symmetric(input)) throw Error(ErrorCode::not_symmetric, "signature of a non-symmetric matrix");
  Matrix a = input;
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  SignatureReport out;
  while (remaining > 0) {
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n; ++k)
      if (active[k] && a(k, k) != 0) {
        pivot = k;
        break;
      }
    if (pivot < n) {
      const Rational d = a(pivot, pivot);
      (d > 0 ? out.n_plus : out.n_minus) += 1;
      active[pivot] = false;
      --remaining;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || a(i, pivot) == 0) continue;
        const Rational f = a(i, pivot) / d;
        for (std::size_t j = 0; j < n; ++j)
          if (active[j]) a(i, j) -= f * a(pivot, j);
      }
      continue;
    }
    std::size_t r = n, s = n;
    for (std::size_t i = 0; i < n && r == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (active[j] && a(i, j) != 0) {
          r = i;
          s = j;
          break;
        }
    }
    if (r == n) {
      out.n_zero += remaining;
      break;
    }
    // Schur complement of the block E = [[0,x],[x,0]], E^{-1} = [[0,1/x],[1/x,0]]:
    // a(i,j) -= (a(i,r) a(s,j) + a(i,s) a(r,j)) / x.
    const Rational x = a(r, s);
    out.n_plus += 1;
    out.n_minus += 1;
    active[r] = active[s] = false;
    remaining -= 2;
    std::vector<Rational> col_r(n), col_s(n);
    for (std::size_t i = 0; i < n; ++i) {
      col_r[i] = a(i, r);
      col_s[i] = a(i, s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j]) continue;
        a(i, j) -= (col_r[i] * col_s[j] + col_s[i] * col_r[j]) / x;
      }
    }
  }
  return out;
}

}  // namespace lorentz
