#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/ag_algebra.hpp"
#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/toeplitz.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz {

/// TP of phi^i(F).
inline Verdict is_strictly_lorentzian(const BivariateForm& f, int i) {
  Verdict v = is_totally_positive(phi(f, i));
  v.property = "strictly_lorentzian";
  v.order = i;
  return v;
}

/// The defining determinants det(c_{m+j+q-p})_{0≤p,q≤j} > 0 for all
/// j ≤ i and 0 ≤ m ≤ d-2j. A witness is reported as the equivalent
/// consecutive minor of phi^i(F).
inline Verdict lorentz_determinants_positive(const BivariateForm& f, int i) {
  const int d = f.degree();
  if (i < 0 || 2 * i > d) throw Error(ErrorCode::index_out_of_range, "order outside 0.." + std::to_string(d / 2));
  for (int j = 0; j <= i; ++j)
    for (int m = 0; m <= d - 2 * j; ++m) {
      Matrix h(static_cast<std::size_t>(j) + 1, static_cast<std::size_t>(j) + 1);
      for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= j; ++q) h(p, q) = f.coeffs()[m + j + q - p];
      const Rational det = determinant(h);
      if (det > 0) continue;
      const int shift = m + j - i;
      const std::size_t r0 = shift >= 0 ? 0 : static_cast<std::size_t>(-shift);
      const std::size_t c0 = shift >= 0 ? static_cast<std::size_t>(shift) : 0;
      Verdict v = detail::failing("strictly_lorentzian", detail::consecutive(r0, j + 1),
                                  detail::consecutive(c0, j + 1), det);
      v.order = i;
      v.detail = "j=" + std::to_string(j) + ", m=" + std::to_string(m);
      return v;
    }
  return Verdict{"strictly_lorentzian", true, i, {}, {}, {}};
}

/// TN of phi^i(F).
inline Verdict is_lorentzian(const BivariateForm& f, int i, const MinorOptions& opts = {}) {
  Verdict v = is_totally_nonnegative(phi(f, i), opts);
  v.property = "lorentzian";
  v.order = i;
  return v;
}

/// Nonnegative, ultra log-concave (c_k^2 ≥ c_{k-1} c_{k+1}), no internal zeros.
inline Verdict newton_ulc_check(const BivariateForm& f) {
  const auto& c = f.coeffs();
  const std::size_t n = c.size();
  Verdict v{"ULC", false, {}, {}, {}, {}};
  for (std::size_t k = 0; k < n; ++k)
    if (c[k] < 0) {
      v.detail = "c_" + std::to_string(k) + " < 0";
      return v;
    }
  for (std::size_t k = 1; k + 1 < n; ++k)
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) {
      v.detail = "c_" + std::to_string(k) + "^2 < c_" + std::to_string(k - 1) + "*c_" + std::to_string(k + 1);
      return v;
    }
  std::size_t first = n, last = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (c[k] != 0) {
      first = std::min(first, k);
      last = k;
    }
  for (std::size_t k = first; k < last; ++k)
    if (c[k] == 0) {
      v.detail = "internal zero c_" + std::to_string(k);
      return v;
    }
  v.pass = true;
  return v;
}

/// Strict and non-strict orders of F over 0 ≤ i ≤ d/2.
struct LorentzClass {
  int order_strict = -1;
  int order = -1;
  std::vector<Verdict> strict;
  std::vector<Verdict> nonstrict;
  std::string detail;
};

inline LorentzClass classify(const BivariateForm& f, const MinorOptions& opts = {}) {
  LorentzClass out;
  if (f.is_zero()) out.detail = "zero form";
  bool strict_run = true, run = true;
  for (int i = 0; 2 * i <= f.degree(); ++i) {
    out.strict.push_back(is_strictly_lorentzian(f, i));
    out.nonstrict.push_back(is_lorentzian(f, i, opts));
    strict_run = strict_run && out.strict.back().pass;
    run = run && out.nonstrict.back().pass;
    if (strict_run) out.order_strict = i;
    if (run) out.order = i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TP approximation of an i-Lorentzian form

/// One rank-raising step H <- G_t(H) + sign * u * Y^d.
struct RankStep {
  Rational t;
  Rational u;
  int sign = 1;
  std::size_t rank_after = 0;
};

/// A certified strictly i-Lorentzian form at dyadic level n (t = 2^-n).
struct ApproxStep {
  int level = 0;
  BivariateForm form;
  std::vector<RankStep> rank_steps;
  Rational t_final;
  Rational distance;
};

struct ApproxOptions {
  Rational epsilon = Rational(1, 1024);
  int budget = 64;
  MinorOptions minors;
};

namespace detail {

inline Rational dyadic(int n) {
  Rational r(1);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

// Tries to build a certified form at t; empty when some step cannot be
// certified within the budget.
inline std::optional<ApproxStep> approximate_level(const BivariateForm& f, int i, int n, const ApproxOptions& opts) {
  const Rational t = dyadic(n);
  ApproxStep step;
  step.level = n;
  BivariateForm h = f;
  std::size_t r = rank(phi(h, i));
  while (r < static_cast<std::size_t>(i) + 1) {
    const BivariateForm base = g_t(h, t);
    const int sign = r % 2 == 0 ? 1 : -1;
    bool raised = false;
    // u = 2^-k for n ≤ k < (d+1)n + budget
    const int last = (f.degree() + 1) * n + opts.budget;
    for (int k = n; k < last; ++k) {
      const Rational u = dyadic(k);
      std::vector<Rational> c = base.coeffs();
      c[0] += sign * u;
      BivariateForm cand(std::move(c));
      const auto m = phi(cand, i);
      if (rank(m) != r + 1 || !is_totally_nonnegative(m, opts.minors).pass) continue;
      step.rank_steps.push_back(RankStep{t, u, sign, r + 1});
      h = std::move(cand);
      ++r;
      raised = true;
      break;
    }
    if (!raised) return std::nullopt;
  }
  BivariateForm out = g_t(h, t);
  if (!is_totally_positive(phi(out, i)).pass) return std::nullopt;
  step.t_final = t;
  step.distance = sup_distance(out, f);
  step.form = std::move(out);
  return step;
}

}  // namespace detail

/// Certified strictly i-Lorentzian forms converging to an i-Lorentzian F,
/// one per successful dyadic level, ending at the first within epsilon.
inline std::vector<ApproxStep> approximate_tp(const BivariateForm& f, int i, const ApproxOptions& opts = {}) {
  if (f.is_zero()) throw Error(ErrorCode::zero_form, "cannot approximate the zero form");
  if (!is_lorentzian(f, i, opts.minors).pass)
    throw Error(ErrorCode::precondition_violation, "F is not " + std::to_string(i) + "-Lorentzian");
  if (opts.epsilon <= 0) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  std::vector<ApproxStep> steps;
  if (is_totally_positive(phi(f, i)).pass) {
    steps.push_back(ApproxStep{0, f, {}, Rational(0), Rational(0)});
    return steps;
  }
  for (int n = 1; n <= opts.budget; ++n) {
    auto step = detail::approximate_level(f, i, n, opts);
    if (!step) continue;
    const bool done = step->distance < opts.epsilon;
    steps.push_back(std::move(*step));
    if (done) return steps;
  }
  throw Error(ErrorCode::budget_exhausted, "no certified approximation within epsilon after " +
                                               std::to_string(opts.budget) + " halvings (last t = " +
                                               to_string(detail::dyadic(opts.budget)) + ")");
}

/// sigma with substitute(F, sigma) strictly i-Lorentzian, from an HRR_i
/// witness ℓ: generators ℓ and ℓ ± 2^-n z, z the coordinate form y (or x
/// when ℓ is a multiple of y).
inline CoordChange straighten_from_hrr(const BivariateForm& f, const LinearForm& ell, int i, int budget = 64) {
  if (!check_hrr(f, i, ell).pass)
    throw Error(ErrorCode::precondition_violation, "F does not satisfy HRR_" + std::to_string(i) + " at the given form");
  if (i > sperner_number(f) - 1)
    throw Error(ErrorCode::precondition_violation, "order exceeds s(F)-1");
  if (is_totally_positive(phi(f, i)).pass && ell.a >= 0 && ell.b >= 0) return CoordChange::identity();
  const LinearForm z = ell.a != 0 ? LinearForm{0, 1} : LinearForm{1, 0};
  for (int n = 0; n < budget; ++n) {
    const Rational eps = detail::dyadic(n);
    for (int sign : {1, -1}) {
      const LinearForm l2{ell.a + sign * eps * z.a, ell.b + sign * eps * z.b};
      const auto sigma = CoordChange::from_generators(ell, l2);
      if (sigma.determinant() == 0) continue;
      if (is_totally_positive(phi(substitute(f, sigma), i)).pass) return sigma;
    }
  }
  throw Error(ErrorCode::budget_exhausted,
              "no straightening found after " + std::to_string(budget) + " halvings");
}

}  // namespace lorentz
