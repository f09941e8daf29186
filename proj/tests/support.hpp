#pragma once

// Independent oracles and seeded generators shared by the tests. Nothing
// here calls the library's elimination code.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lorentz/lorentz.hpp"

namespace oracle {

using lorentz::BivariateForm;
using lorentz::Integer;
using lorentz::Matrix;
using lorentz::Polynomial;
using lorentz::Rational;

/// Leibniz expansion.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Rational term = sign;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational minor_det(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) s(a, b) = m(rows[a], cols[b]);
  return leibniz_det(s);
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// strict: every minor > 0; otherwise every minor ≥ 0.
inline bool all_minors(const Matrix& m, bool strict) {
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    for (const auto& r : subsets(m.rows(), k))
      for (const auto& c : subsets(m.cols(), k)) {
        const Rational v = minor_det(m, r, c);
        if (strict ? v <= 0 : v < 0) return false;
      }
  return true;
}

/// Plain Gaussian elimination over Q.
inline std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// h_j as the dimension of {m∘F : m a monomial of degree j}.
inline std::size_t derivative_span_rank(const BivariateForm& f, int j) {
  if (j > f.degree()) return 0;
  Matrix m(static_cast<std::size_t>(j) + 1, static_cast<std::size_t>(f.degree() - j) + 1);
  for (int a = 0; a <= j; ++a) {
    const auto g = lorentz::derive(f, lorentz::DualForm::monomial(a, j - a));
    for (int k = 0; k <= f.degree() - j; ++k) m(a, k) = g.coeffs()[k];
  }
  return naive_rank(m);
}

/// Characteristic polynomial det(tI - M) by Faddeev–LeVerrier.
inline Polynomial charpoly(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> coef(n + 1);
  coef[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coef[n - k + 1];
    mk = next;
    Matrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    coef[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(coef);
}

struct Inertia {
  std::size_t plus = 0, zero = 0, minus = 0;
};

/// Inertia of a real-rooted characteristic polynomial via Descartes' rule,
/// which is exact for real-rooted polynomials.
inline Inertia inertia_from_charpoly(const Polynomial& p) {
  const auto& c = p.coeffs();
  Inertia out;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  out.zero = low;
  auto changes = [&](bool flip) {
    std::size_t n = 0;
    int last = 0;
    for (std::size_t k = low; k < c.size(); ++k) {
      int s = sgn(c[k]);
      if (flip && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  };
  out.plus = changes(false);
  out.minus = changes(true);
  return out;
}

/// Real roots with multiplicity by the rational root theorem; exact for
/// polynomials that split over Q.
inline std::vector<Rational> rational_roots(Polynomial p) {
  std::vector<Rational> roots;
  while (p.degree() > 0 && p.coeff(0) == 0) {
    roots.push_back(0);
    p = lorentz::divmod(p, Polynomial({0, 1})).first;
  }
  if (p.degree() <= 0) return roots;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  auto divisors = [](Integer v) {
    v = abs(v);
    std::vector<Integer> ds;
    for (Integer k = 1; k * k <= v; ++k)
      if (v % k == 0) {
        ds.push_back(k);
        if (k * k != v) ds.push_back(v / k);
      }
    return ds;
  };
  const Integer a0 = Rational(p.coeff(0) * l).get_num();
  const Integer an = Rational(p.leading() * l).get_num();
  std::set<Rational> candidates;
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an)) {
      Rational q(num, den);
      q.canonicalize();
      candidates.insert(q);
      candidates.insert(-q);
    }
  for (const auto& q : candidates) {
    while (p.degree() > 0 && p(q) == 0) {
      roots.push_back(q);
      p = lorentz::divmod(p, Polynomial::linear_root(q)).first;
    }
  }
  return roots;
}

}  // namespace oracle

namespace gen {

using lorentz::BivariateForm;
using lorentz::LinearForm;
using lorentz::Matrix;
using lorentz::Rational;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rational(Rng& rng, long lo, long hi, long max_den = 4) {
  Rational r(uniform(rng, lo, hi), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline Rational positive(Rng& rng, long hi = 6, long max_den = 4) {
  Rational r(uniform(rng, 1, hi), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, long max_den = 3) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(rng, lo, hi, max_den);
  return m;
}

/// Generalized Vandermonde (x_r^(y_c)) with increasing x > 0 and increasing
/// integer y: totally positive.
inline Matrix vandermonde(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Rational> x;
  Rational acc = 0;
  for (std::size_t r = 0; r < rows; ++r) x.push_back(acc += positive(rng, 3, 2));
  std::vector<long> y;
  long e = uniform(rng, 0, 1);
  for (std::size_t c = 0; c < cols; ++c) y.push_back(e += uniform(rng, 1, 2));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = lorentz::power(x[r], y[c]);
  return m;
}

inline Matrix symmetric(Rng& rng, std::size_t n, long lo, long hi) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = rational(rng, lo, hi, 3);
  return m;
}

inline BivariateForm form(Rng& rng, int d, long lo = -4, long hi = 6) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = rational(rng, lo, hi);
  return BivariateForm(std::move(c));
}

inline BivariateForm positive_form(Rng& rng, int d) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = positive(rng, 8);
  return BivariateForm(std::move(c));
}

/// Normalized coefficients c_k = coefficient of t^k in prod (t + r_j),
/// r_j ≥ 0 rational; some roots are 0 so that boundary cases appear.
inline BivariateForm normally_stable(Rng& rng, int d) {
  lorentz::Polynomial p = lorentz::Polynomial::constant(positive(rng, 3, 2));
  for (int k = 0; k < d; ++k) {
    const Rational r = uniform(rng, 0, 4) == 0 ? Rational(0) : positive(rng, 5, 3);
    p = p * lorentz::Polynomial({r, 1});
  }
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[k] = p.coeff(k);
  return BivariateForm(std::move(c));
}

/// Form whose monomial coefficients are those of prod (a_j X + b_j Y), a_j, b_j ≥ 0.
inline BivariateForm stable(Rng& rng, int d) {
  std::vector<Rational> raw{1};
  for (int k = 0; k < d; ++k) {
    const Rational a = uniform(rng, 0, 5) == 0 ? Rational(0) : positive(rng, 4, 3);
    const Rational b = a == 0 || uniform(rng, 0, 5) != 0 ? positive(rng, 4, 3) : Rational(0);
    std::vector<Rational> next(raw.size() + 1);
    for (std::size_t j = 0; j < raw.size(); ++j) {
      next[j] += raw[j] * b;
      next[j + 1] += raw[j] * a;
    }
    raw = std::move(next);
  }
  return lorentz::from_monomial_coeffs(raw);
}

inline LinearForm positive_point(Rng& rng) { return LinearForm{positive(rng), positive(rng)}; }

inline LinearForm nonzero_point(Rng& rng) {
  while (true) {
    LinearForm l{rational(rng, -5, 5), rational(rng, -5, 5)};
    if (!l.is_zero()) return l;
  }
}

inline std::vector<LinearForm> positive_points(Rng& rng, int n) {
  std::vector<LinearForm> out;
  for (int k = 0; k < n; ++k) out.push_back(positive_point(rng));
  return out;
}

}  // namespace gen
