#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/hessian.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz {

/// w_m = [z^m] prod_k (a_k z + b_k); weights[k] = (a_{k+1}, b_{k+1}).
inline std::vector<Rational> path_weights(std::span<const LinearForm> weights) { return mixing_weights(weights); }

/// Window of the bi-infinite band matrix W_s with entry (p,q) = w_{p-q}.
inline Matrix path_matrix(int s, std::span<const LinearForm> weights, std::span<const long> rows,
                          std::span<const long> cols) {
  if (s < 0 || static_cast<int>(weights.size()) != s) {
    throw Error(ErrorCode::shape_mismatch, "path matrix with s = " + std::to_string(s) + " needs " +
                                               std::to_string(s) + " weight pairs, got " +
                                               std::to_string(weights.size()));
  }
  const auto w = path_weights(weights);
  Matrix m(rows.size(), cols.size());
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 0; q < cols.size(); ++q) {
      const long k = rows[p] - cols[q];
      if (k >= 0 && k <= s) m(p, q) = w[k];
    }
  return m;
}

namespace detail {

struct LatticePoint {
  long x;
  long y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// All NE paths with s steps from (-p, p) to (-q, q + s), each as its vertex
// list and weight; step k is E with weight a_k or N with weight b_k.
inline void enumerate_paths(long p, long q, std::span<const LinearForm> weights,
                            std::vector<std::vector<LatticePoint>>& paths, std::vector<Rational>& path_weight) {
  const long s = static_cast<long>(weights.size());
  const long east = p - q;
  if (east < 0 || east > s) return;
  std::vector<LatticePoint> cur{{-p, p}};
  std::function<void(long, long, Rational)> go = [&](long step, long east_left, Rational wt) {
    if (step == s) {
      if (east_left == 0) {
        paths.push_back(cur);
        path_weight.push_back(wt);
      }
      return;
    }
    const LatticePoint here = cur.back();
    if (east_left > 0) {
      cur.push_back({here.x + 1, here.y});
      go(step + 1, east_left - 1, wt * weights[step].a);
      cur.pop_back();
    }
    if (s - step > east_left) {
      cur.push_back({here.x, here.y + 1});
      go(step + 1, east_left, wt * weights[step].b);
      cur.pop_back();
    }
  };
  go(0, east, Rational(1));
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace detail

/// Minor det(W_s)_{I,J} by explicit enumeration of vertex-disjoint path
/// systems from A_p = (-p, p), p ∈ I, to B_q = (-q, q + s), q ∈ J, summed
/// with permutation signs. Throws budget_exhausted past `budget` systems.
inline Rational lgv_minor_oracle(int s, std::span<const LinearForm> weights, std::span<const long> rows,
                                 std::span<const long> cols, std::size_t budget = 1000000) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::shape_mismatch, "row and column sets differ in size");
  if (s < 0 || static_cast<int>(weights.size()) != s)
    throw Error(ErrorCode::shape_mismatch, "weight count does not match s");
  const std::size_t k = rows.size();
  if (k == 0) return 1;

  // paths[a][b]: all paths from A_{rows[a]} to B_{cols[b]}.
  std::vector<std::vector<std::vector<std::vector<detail::LatticePoint>>>> paths(k, std::vector<std::vector<std::vector<detail::LatticePoint>>>(k));
  std::vector<std::vector<std::vector<Rational>>> wts(k, std::vector<std::vector<Rational>>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) detail::enumerate_paths(rows[a], cols[b], weights, paths[a][b], wts[a][b]);

  std::vector<std::size_t> perm(k);
  for (std::size_t j = 0; j < k; ++j) perm[j] = j;
  Rational total = 0;
  std::size_t systems = 0;
  std::vector<std::vector<detail::LatticePoint>> used;

  auto disjoint = [](const std::vector<detail::LatticePoint>& path,
                     const std::vector<std::vector<detail::LatticePoint>>& others) {
    for (const auto& other : others)
      for (const auto& u : path)
        for (const auto& v : other)
          if (u == v) return false;
    return true;
  };

  do {
    const int sign = detail::permutation_sign(perm);
    std::function<void(std::size_t, Rational)> place = [&](std::size_t a, Rational wt) {
      if (a == k) {
        if (++systems > budget)
          throw Error(ErrorCode::budget_exhausted, "path enumeration exceeded " + std::to_string(budget) + " systems");
        total += sign * wt;
        return;
      }
      const auto& options = paths[a][perm[a]];
      for (std::size_t t = 0; t < options.size(); ++t) {
        if (!disjoint(options[t], used)) continue;
        used.push_back(options[t]);
        place(a + 1, wt * wts[a][perm[a]][t]);
        used.pop_back();
      }
    };
    place(0, Rational(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Window of phi_d(F) = (c_{q-p}), zero outside the band 0 ≤ q-p ≤ d.
inline Matrix phi_infinite_window(const BivariateForm& f, std::span<const long> rows, std::span<const long> cols) {
  Matrix m(rows.size(), cols.size());
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = 0; q < cols.size(); ++q) m(p, q) = f.coeff(cols[q] - rows[p]);
  return m;
}

/// Checks P_i MHess_i(F, points) = d! (phi_d(F) W_{d-2i})_{I,J} entrywise with
/// I = {0..i}, J = {i..2i}. The product is truncated to the band support
/// 0..d+i, which is exact.
inline Verdict verify_factorization(const BivariateForm& f, int i, std::span<const LinearForm> points) {
  const int d = f.degree();
  const int s = d - 2 * i;
  const Matrix lhs = reverse_rows(eval_mixed_hessian(hessian_spec(f, i), points));

  std::vector<long> rows_i, cols_j, mid;
  for (long p = 0; p <= i; ++p) rows_i.push_back(p);
  for (long q = i; q <= 2 * i; ++q) cols_j.push_back(q);
  for (long k = 0; k <= d + i; ++k) mid.push_back(k);
  const Matrix rhs = Rational(factorial(d)) *
                     (phi_infinite_window(f, rows_i, mid) * path_matrix(s, points, mid, cols_j));

  for (std::size_t p = 0; p < lhs.rows(); ++p)
    for (std::size_t q = 0; q < lhs.cols(); ++q)
      if (lhs(p, q) != rhs(p, q)) {
        Verdict v{"factorization", false, i, {}, {}, {}};
        v.witness = MinorWitness{{p}, {q}, lhs(p, q) - rhs(p, q)};
        v.detail = "entry (" + std::to_string(p) + "," + std::to_string(q) + "): " + to_string(lhs(p, q)) +
                   " vs " + to_string(rhs(p, q));
        return v;
      }
  return Verdict{"factorization", true, i, {}, {}, {}};
}

}  // namespace lorentz
