#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/error.hpp"
#include "lorentz/hessian.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/toeplitz.hpp"
#include "lorentz/verdict.hpp"

namespace lorentz {

/// Hilbert function and Sperner number of A_F = R[x,y]/Ann(F).
struct AlgebraProfile {
  BivariateForm form;
  std::vector<std::size_t> hilbert;
  std::size_t sperner = 0;
  int socle_degree = 0;
};

/// h_i = rank(phi^i) for i ≤ d/2, reflected through h_i = h_{d-i}.
inline AlgebraProfile profile(const BivariateForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::zero_form, "the zero form has no algebra");
  const int d = f.degree();
  AlgebraProfile out;
  out.form = f;
  out.socle_degree = d;
  out.hilbert.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; 2 * i <= d; ++i) {
    const std::size_t h = rank(phi(f, i));
    out.hilbert[i] = h;
    out.hilbert[d - i] = h;
  }
  out.sperner = *std::max_element(out.hilbert.begin(), out.hilbert.end());
  return out;
}

inline int sperner_number(const BivariateForm& f) { return static_cast<int>(profile(f).sperner); }

/// Matrix of g ↦ g∘F from degree-j operators to degree d-j forms, up to the
/// factor (d)_j. Columns are the monomials x^j, x^(j-1) y, ..., y^j; rows are
/// the normalized coefficients of the result. Empty (zero rows) for j > d.
inline Matrix catalecticant(const BivariateForm& f, int j) {
  const int d = f.degree();
  if (j < 0) throw Error(ErrorCode::index_out_of_range, "negative degree");
  const std::size_t nrows = j > d ? 0 : static_cast<std::size_t>(d - j) + 1;
  Matrix m(nrows, static_cast<std::size_t>(j) + 1);
  for (std::size_t l = 0; l < nrows; ++l)
    for (int t = 0; t <= j; ++t) m(l, t) = f.coeffs()[l + (j - t)];
  return m;
}

namespace detail {

// Column t of a degree-e catalecticant is the monomial x^(e-t) y^t.
inline DualForm dual_from_column_vector(const std::vector<Rational>& v) {
  const int e = static_cast<int>(v.size()) - 1;
  std::vector<Rational> by_x(v.size());
  for (int t = 0; t <= e; ++t) by_x[e - t] = v[t];
  return DualForm(std::move(by_x));
}

// Integer coprime coefficients, positive on the highest x power present.
inline DualForm normalize_generator(const DualForm& g) {
  Integer l = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer gc = 0;
  for (const auto& c : g.coeffs()) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), n.get_mpz_t());
  }
  if (gc == 0) return g;
  Rational scale(l, gc);
  scale.canonicalize();
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
    if (*it != 0) {
      if (*it < 0) scale = -scale;
      break;
    }
  std::vector<Rational> out(g.coeffs());
  for (auto& c : out) c *= scale;
  return DualForm(std::move(out));
}

// Whether v (by x power) lies in the span of the given dual forms.
inline bool in_span(const std::vector<DualForm>& span, const DualForm& v) {
  if (span.empty()) return v.is_zero();
  const std::size_t n = v.coeffs().size();
  Matrix a(span.size(), n), b(span.size() + 1, n);
  for (std::size_t r = 0; r < span.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = b(r, c) = span[r].coeffs()[c];
  for (std::size_t c = 0; c < n; ++c) b(span.size(), c) = v.coeffs()[c];
  return rank(a) == rank(b);
}

}  // namespace detail

/// Generators (f1, f2) of Ann(F), deg f1 = s(F), deg f2 = d + 2 - s(F).
inline std::pair<DualForm, DualForm> annihilator_generators(const BivariateForm& f) {
  const auto prof = profile(f);
  const int d = f.degree();
  const int s = static_cast<int>(prof.sperner);
  const auto k1 = kernel_basis(catalecticant(f, s));
  if (k1.empty()) throw Error(ErrorCode::precondition_violation, "no annihilator in degree s(F)");
  const DualForm f1 = detail::normalize_generator(detail::dual_from_column_vector(k1.front()));

  const int e = d + 2 - s;
  std::vector<DualForm> multiples;
  for (int a = 0; a <= e - s; ++a) multiples.push_back(f1 * DualForm::monomial(a, e - s - a));
  std::optional<DualForm> f2;
  for (const auto& v : kernel_basis(catalecticant(f, e))) {
    DualForm g = detail::dual_from_column_vector(v);
    if (!detail::in_span(multiples, g)) {
      f2 = detail::normalize_generator(g);
      break;
    }
  }
  if (!f2) throw Error(ErrorCode::precondition_violation, "no second annihilator generator found");

  for (const DualForm& g : {f1, *f2}) {
    if (g.degree() <= d && !derive(f, g).is_zero())
      throw Error(ErrorCode::precondition_violation, "generator " + format_dual(g) + " does not annihilate F");
  }
  return {f1, *f2};
}

/// Kernel of α ↦ (ℓ0 ℓ_1 ... ℓ_{d-2j} α)∘F on degree-j operators.
struct PrimitiveSubspace {
  int degree = 0;
  std::vector<DualForm> basis;
  std::size_t expected_dimension = 0;
  bool dimension_matches = false;
};

inline PrimitiveSubspace primitive_subspace(const BivariateForm& f, int j, const LinearForm& ell0,
                                            std::span<const LinearForm> forms) {
  const auto prof = profile(f);
  const int d = f.degree();
  if (j < 0 || j > static_cast<int>(prof.sperner) - 1) {
    throw Error(ErrorCode::index_out_of_range,
                "primitive subspace degree " + std::to_string(j) + " outside 0.." +
                    std::to_string(static_cast<int>(prof.sperner) - 1));
  }
  if (static_cast<int>(forms.size()) != d - 2 * j) {
    throw Error(ErrorCode::shape_mismatch, "degree " + std::to_string(j) + " needs " + std::to_string(d - 2 * j) +
                                               " linear forms, got " + std::to_string(forms.size()));
  }
  DualForm product = DualForm::linear(ell0);
  for (const auto& l : forms) product = product * DualForm::linear(l);

  // The operator has degree d - j + 1 and the image has degree j - 1.
  Matrix map(static_cast<std::size_t>(std::max(j, 0)), static_cast<std::size_t>(j) + 1);
  for (int t = 0; t <= j && j > 0; ++t) {
    const auto image = derive(f, product * DualForm::monomial(j - t, t));
    for (int l = 0; l < j; ++l) map(l, t) = image.coeffs()[l];
  }
  PrimitiveSubspace out;
  out.degree = j;
  for (const auto& v : kernel_basis(map)) out.basis.push_back(detail::dual_from_column_vector(v));
  out.expected_dimension = prof.hilbert[j] - (j > 0 ? prof.hilbert[j - 1] : 0);
  out.dimension_matches = out.basis.size() == out.expected_dimension;
  return out;
}

namespace detail {

inline void require_nonzero(const LinearForm& l) {
  if (l.is_zero()) throw Error(ErrorCode::invalid_argument, "the linear form is zero");
}

inline int checked_top(const BivariateForm& f, int i) {
  if (i < 0) throw Error(ErrorCode::index_out_of_range, "negative order");
  return std::min(i, sperner_number(f) - 1);
}

inline Verdict degree_failure(std::string property, int i, int j, std::vector<LinearForm> points, Rational value) {
  Verdict v{std::move(property), false, i, {}, {}, {}};
  v.failure = DegreeFailure{j, std::move(points), std::move(value)};
  return v;
}

}  // namespace detail

/// Ordinary HRR_i at ℓ: permuted Hessian determinants positive for
/// j ≤ min(i, s(F)-1); vacuous beyond.
inline Verdict check_hrr(const BivariateForm& f, int i, const LinearForm& ell) {
  detail::require_nonzero(ell);
  const std::string name = "HRR_" + std::to_string(i);
  const int top = detail::checked_top(f, i);
  for (int j = 0; j <= top; ++j) {
    const Rational det = permuted_det(eval_hessian(hessian_spec(f, j), ell.a, ell.b));
    if (det <= 0) return detail::degree_failure(name, i, j, {ell}, det);
  }
  return Verdict{name, true, i, {}, {}, {}};
}

/// SL_i at ℓ: Hessian determinants nonzero for j ≤ min(i, s(F)-1).
inline Verdict check_sl(const BivariateForm& f, int i, const LinearForm& ell) {
  detail::require_nonzero(ell);
  const std::string name = "SL_" + std::to_string(i);
  const int top = detail::checked_top(f, i);
  for (int j = 0; j <= top; ++j) {
    const Rational det = determinant(eval_hessian(hessian_spec(f, j), ell.a, ell.b));
    if (det == 0) return detail::degree_failure(name, i, j, {ell}, det);
  }
  return Verdict{name, true, i, {}, {}, {}};
}

/// Mixed HRR_i at the supplied tuples only: pointsets[j] holds the d-2j
/// points used in degree j.
inline Verdict check_mixed_hrr_at(const BivariateForm& f, int i,
                                  const std::vector<std::vector<LinearForm>>& pointsets) {
  const int d = f.degree();
  if (i < 0 || 2 * i > d) throw Error(ErrorCode::index_out_of_range, "order outside 0.." + std::to_string(d / 2));
  if (static_cast<int>(pointsets.size()) != i + 1) {
    throw Error(ErrorCode::shape_mismatch, "expected " + std::to_string(i + 1) + " point sets, got " +
                                               std::to_string(pointsets.size()));
  }
  for (int j = 0; j <= i; ++j)
    if (static_cast<int>(pointsets[j].size()) != d - 2 * j) {
      throw Error(ErrorCode::shape_mismatch, "point set " + std::to_string(j) + " needs " +
                                                 std::to_string(d - 2 * j) + " points, got " +
                                                 std::to_string(pointsets[j].size()));
    }
  const std::string name = "mixedHRR_" + std::to_string(i);
  const int top = detail::checked_top(f, i);
  for (int j = 0; j <= top; ++j) {
    const Rational det = permuted_det(eval_mixed_hessian(hessian_spec(f, j), pointsets[j]));
    if (det <= 0) return detail::degree_failure(name, i, j, pointsets[j], det);
  }
  return Verdict{name, true, i, {}, {}, {}};
}

enum class Cone { open, closed };

inline std::string_view to_string(Cone c) { return c == Cone::open ? "open" : "closed"; }

/// Mixed HRR_i on the whole standard cone, decided by TN (open) or TP with
/// i ≤ s(F)-1 (closed) of phi^i(F).
inline Verdict check_mixed_hrr_cone(const BivariateForm& f, int i, Cone cone, const MinorOptions& opts = {}) {
  const auto m = phi(f, i);
  const std::string name = "mixedHRR_" + std::to_string(i);
  Verdict v;
  if (cone == Cone::open) {
    v = is_totally_nonnegative(m, opts);
  } else {
    v = is_totally_positive(m);
    if (v.pass && !f.is_zero() && i > sperner_number(f) - 1) {
      v.pass = false;
      v.detail = "order exceeds s(F)-1";
    }
  }
  v.property = name;
  v.order = i;
  return v;
}

/// Same, on the cone spanned by ℓ1 and ℓ2: the standard-cone decision for
/// F(pX + rY, qX + sY) with sigma = [[p, r], [q, s]] built from the generators.
inline Verdict check_mixed_hrr_cone(const BivariateForm& f, int i, Cone cone, const LinearForm& l1,
                                    const LinearForm& l2, const MinorOptions& opts = {}) {
  const auto sigma = CoordChange::from_generators(l1, l2);
  if (sigma.determinant() == 0)
    throw Error(ErrorCode::singular_coordinate_change, "cone generators are linearly dependent");
  return check_mixed_hrr_cone(substitute(f, sigma), i, cone, opts);
}

/// Dual generator ℓ∘F of A/(0:ℓ).
inline BivariateForm quotient_by_colon(const BivariateForm& f, const LinearForm& ell) {
  detail::require_nonzero(ell);
  auto g = derive(f, ell);
  if (g.is_zero()) throw Error(ErrorCode::precondition_violation, "the linear form annihilates F");
  return g;
}

}  // namespace lorentz
