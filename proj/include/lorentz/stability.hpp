#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/toeplitz.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz {

/// Real-root census of a univariate polynomial. Counts other than
/// `distinct_real` include multiplicity.
struct RootCount {
  int degree = 0;
  int distinct_real = 0;
  int total_real = 0;
  int nonpositive_real = 0;
  int degree_drop = 0;

  bool real_rooted() const { return total_real == degree; }
};

/// Exact counts via Yun's square-free decomposition and Sturm chains on each
/// factor. `nominal_degree` (when given) sets `degree_drop`.
inline RootCount count_roots(const Polynomial& f, std::optional<int> nominal_degree = std::nullopt) {
  if (f.is_zero()) throw Error(ErrorCode::invalid_argument, "root count of the zero polynomial");
  RootCount out;
  out.degree = f.degree();
  out.degree_drop = nominal_degree ? *nominal_degree - f.degree() : 0;
  const auto factors = square_free_factors(f);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Polynomial& g = factors[k];
    if (g.degree() <= 0) continue;
    const int mult = static_cast<int>(k) + 1;
    const int all = count_distinct_roots(g, std::nullopt, std::nullopt);
    const int nonpos = count_distinct_roots(g, std::nullopt, Rational(0));
    out.distinct_real += all;
    out.total_real += mult * all;
    out.nonpositive_real += mult * nonpos;
  }
  return out;
}

/// f(t) = F(1, t) = sum_k raw_k t^(d-k).
inline Polynomial dehomogenize(const BivariateForm& f) {
  const auto raw = to_monomial_coeffs(f);
  std::vector<Rational> asc(raw.rbegin(), raw.rend());
  return Polynomial(std::move(asc));
}

/// Homogeneous reading: F is stable iff F ≡ 0 or F is a product of linear
/// forms aX + bY with a, b ≥ 0. A degree drop of F(1,t) comes from factors
/// of X (roots at infinity) and is allowed.
inline Verdict is_stable(const BivariateForm& f) {
  Verdict v{"stable", true, {}, {}, {}, {}};
  if (f.is_zero()) {
    v.detail = "zero form";
    return v;
  }
  const auto raw = to_monomial_coeffs(f);
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (raw[k] < 0) {
      v.pass = false;
      v.detail = "negative coefficient of X^" + std::to_string(k) + "*Y^" + std::to_string(raw.size() - 1 - k);
      return v;
    }
  const auto rc = count_roots(dehomogenize(f), f.degree());
  if (!rc.real_rooted()) {
    v.pass = false;
    v.detail = "F(1,t) has " + std::to_string(rc.total_real) + " of " + std::to_string(rc.degree) + " roots real";
  } else if (rc.nonpositive_real != rc.degree) {
    v.pass = false;
    v.detail = "F(1,t) has a positive root";
  }
  return v;
}

/// Stability of the tilde form sum_k c_k X^k Y^(d-k).
inline Verdict is_normally_stable(const BivariateForm& f) {
  Verdict v = is_stable(from_monomial_coeffs(f.coeffs()));
  v.property = "normally_stable";
  return v;
}

/// TN of phi^i(F) for every 0 ≤ i ≤ min(i_max, d/2).
inline Verdict pf_window_check(const BivariateForm& f, int i_max, const MinorOptions& opts = {}) {
  const int top = std::min(i_max, f.degree() / 2);
  for (int i = 0; i <= top; ++i) {
    Verdict tn = is_totally_nonnegative(phi(f, i), opts);
    if (!tn.pass) {
      tn.property = "PF";
      tn.order = i;
      return tn;
    }
  }
  Verdict v{"PF", true, {}, {}, {}, {}};
  v.order = std::max(top, -1);
  return v;
}

}  // namespace lorentz
