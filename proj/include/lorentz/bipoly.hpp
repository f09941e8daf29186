#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Homogeneous form F(X,Y) of degree d, stored by normalized coefficients:
/// F = sum_k C(d,k) c_k X^k Y^(d-k).
class BivariateForm {
 public:
  BivariateForm() : coeffs_(1) {}

  explicit BivariateForm(std::vector<Rational> normalized) : coeffs_(std::move(normalized)) {
    if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "a form needs at least one coefficient");
  }

  static BivariateForm zero(int degree) {
    if (degree < 0) throw Error(ErrorCode::invalid_argument, "negative degree");
    return BivariateForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// c_k, extended by zero outside 0..d.
  Rational coeff(long k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& v) { return v == 0; });
  }

  friend bool operator==(const BivariateForm& a, const BivariateForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// raw_k is the coefficient of X^k Y^(d-k).
inline BivariateForm from_monomial_coeffs(const std::vector<Rational>& raw) {
  if (raw.empty()) throw Error(ErrorCode::invalid_argument, "empty coefficient sequence");
  const long d = static_cast<long>(raw.size()) - 1;
  std::vector<Rational> c(raw.size());
  for (long k = 0; k <= d; ++k) c[k] = raw[k] / Rational(binomial(d, k));
  return BivariateForm(std::move(c));
}

inline std::vector<Rational> to_monomial_coeffs(const BivariateForm& f) {
  const long d = f.degree();
  std::vector<Rational> raw(f.coeffs().size());
  for (long k = 0; k <= d; ++k) raw[k] = f.coeffs()[k] * Rational(binomial(d, k));
  return raw;
}

inline BivariateForm operator+(const BivariateForm& a, const BivariateForm& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::shape_mismatch, "adding forms of different degree");
  std::vector<Rational> c(a.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
  return BivariateForm(std::move(c));
}

inline BivariateForm operator*(const Rational& s, const BivariateForm& f) {
  std::vector<Rational> c(f.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * f.coeffs()[k];
  return BivariateForm(std::move(c));
}

/// F(Y,X): reverses the coefficient sequence.
inline BivariateForm swap_variables(const BivariateForm& f) {
  std::vector<Rational> c(f.coeffs().rbegin(), f.coeffs().rend());
  return BivariateForm(std::move(c));
}

/// max_k |c_k - c'_k|.
inline Rational sup_distance(const BivariateForm& a, const BivariateForm& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::shape_mismatch, "distance between forms of different degree");
  Rational best = 0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) best = std::max<Rational>(best, abs(a.coeffs()[k] - b.coeffs()[k]));
  return best;
}

/// Value F(a,b).
inline Rational evaluate(const BivariateForm& f, const Rational& a, const Rational& b) {
  auto raw = to_monomial_coeffs(f);
  Rational out = 0;
  for (long k = 0; k <= f.degree(); ++k) out += raw[k] * power(a, k) * power(b, f.degree() - k);
  return out;
}

/// Linear form a x + b y in the dual variables; also used as a point (a,b).
struct LinearForm {
  Rational a;
  Rational b;

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Homogeneous polynomial in the dual variables x,y acting by differentiation.
/// coeff[j] multiplies x^j y^(e-j).
class DualForm {
 public:
  DualForm() : coeffs_(1) {}
  explicit DualForm(std::vector<Rational> by_x_power) : coeffs_(std::move(by_x_power)) {
    if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "a dual form needs at least one coefficient");
  }

  /// From sparse terms (x power, y power, coefficient); all terms must share one degree.
  static DualForm from_terms(const std::vector<std::tuple<int, int, Rational>>& terms) {
    if (terms.empty()) throw Error(ErrorCode::invalid_argument, "empty term list");
    const int e = std::get<0>(terms.front()) + std::get<1>(terms.front());
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    for (const auto& [j, k, coef] : terms) {
      if (j < 0 || k < 0 || j + k != e)
        throw Error(ErrorCode::invalid_argument, "dual polynomial is not homogeneous");
      c[j] += coef;
    }
    return DualForm(std::move(c));
  }

  static DualForm monomial(int x_power, int y_power) {
    std::vector<Rational> c(static_cast<std::size_t>(x_power + y_power) + 1);
    c[x_power] = 1;
    return DualForm(std::move(c));
  }

  static DualForm linear(const LinearForm& l) { return DualForm({l.b, l.a}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& v) { return v == 0; });
  }

  friend bool operator==(const DualForm& a, const DualForm& b) { return a.coeffs_ == b.coeffs_; }

  friend DualForm operator*(const DualForm& a, const DualForm& b) {
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DualForm(std::move(c));
  }

 private:
  std::vector<Rational> coeffs_;
};

/// g∘F: g acts by partial differentiation (x = d/dX, y = d/dY). The result
/// is the true derivative, including the falling-factorial factors.
inline BivariateForm derive(const BivariateForm& f, const DualForm& g) {
  const long d = f.degree();
  const long e = g.degree();
  if (e > d) {
    throw Error(ErrorCode::degree_underflow,
                "cannot apply a degree " + std::to_string(e) + " operator to a degree " +
                    std::to_string(d) + " form");
  }
  const auto raw = to_monomial_coeffs(f);
  std::vector<Rational> out(static_cast<std::size_t>(d - e) + 1);
  // x^j y^(e-j) ∘ X^k Y^(d-k) = (k)_j (d-k)_(e-j) X^(k-j) Y^(d-k-e+j)
  for (long j = 0; j <= e; ++j) {
    const Rational& gj = g.coeffs()[j];
    if (gj == 0) continue;
    for (long k = j; k <= d; ++k) {
      if (d - k < e - j || raw[k] == 0) continue;
      out[k - j] += gj * raw[k] * Rational(falling_factorial(k, j) * falling_factorial(d - k, e - j));
    }
  }
  return from_monomial_coeffs(out);
}

inline BivariateForm derive(const BivariateForm& f, const LinearForm& l) {
  return derive(f, DualForm::linear(l));
}

/// Linear substitution X -> p X + r Y, Y -> q X + s Y, i.e. the matrix
/// sigma = [[p, r], [q, s]] acting on the column (X, Y).
struct CoordChange {
  Rational p;
  Rational q;
  Rational r;
  Rational s;

  /// sigma given row by row: [[m00, m01], [m10, m11]].
  static CoordChange from_rows(Rational m00, Rational m01, Rational m10, Rational m11) {
    return CoordChange{std::move(m00), std::move(m10), std::move(m01), std::move(m11)};
  }

  static CoordChange identity() { return from_rows(1, 0, 0, 1); }

  /// The change induced by sending x -> l1 and y -> l2 on the dual side.
  static CoordChange from_generators(const LinearForm& l1, const LinearForm& l2) {
    return CoordChange{l1.a, l1.b, l2.a, l2.b};
  }

  Rational determinant() const { return p * s - q * r; }

  friend bool operator==(const CoordChange&, const CoordChange&) = default;
};

/// Matrix product sigma * tau.
inline CoordChange compose(const CoordChange& sigma, const CoordChange& tau) {
  return CoordChange::from_rows(sigma.p * tau.p + sigma.r * tau.q, sigma.p * tau.r + sigma.r * tau.s,
                                sigma.q * tau.p + sigma.s * tau.q, sigma.q * tau.r + sigma.s * tau.s);
}

namespace detail {

// Coefficients (by power of X) of (u X + v Y)^n.
inline std::vector<Rational> linear_power(const Rational& u, const Rational& v, long n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out[k] = Rational(binomial(n, k)) * power(u, k) * power(v, n - k);
  return out;
}

}  // namespace detail

/// G(X,Y) = F(pX + rY, qX + sY).
inline BivariateForm substitute(const BivariateForm& f, const CoordChange& sigma) {
  const long d = f.degree();
  const auto raw = to_monomial_coeffs(f);
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (long k = 0; k <= d; ++k) {
    if (raw[k] == 0) continue;
    auto xs = detail::linear_power(sigma.p, sigma.r, k);
    auto ys = detail::linear_power(sigma.q, sigma.s, d - k);
    for (std::size_t a = 0; a < xs.size(); ++a) {
      if (xs[a] == 0) continue;
      for (std::size_t b = 0; b < ys.size(); ++b) out[a + b] += raw[k] * xs[a] * ys[b];
    }
  }
  return from_monomial_coeffs(out);
}

/// G_t(X,Y) = F(X + tY, tX + Y).
inline BivariateForm g_t(const BivariateForm& f, const Rational& t) {
  return substitute(f, CoordChange::from_rows(1, t, t, 1));
}

// ---------------------------------------------------------------------------
// Text I/O

enum class CoeffConvention { normalized, monomial };

inline std::string_view to_string(CoeffConvention c) {
  return c == CoeffConvention::normalized ? "c" : "monomial";
}

struct ParsedForm {
  BivariateForm form;
  CoeffConvention convention = CoeffConvention::normalized;
};

/// Accepts `[c:|monomial:] [d:] r_0, r_1, ..., r_d`. Without a prefix the
/// coefficients are normalized c_k; with `monomial:` they are the raw
/// coefficients of X^k Y^(d-k).
inline ParsedForm parse_form(std::string_view text) {
  std::string_view s = detail::trim(text);
  ParsedForm out;
  if (s.starts_with("monomial:")) {
    out.convention = CoeffConvention::monomial;
    s.remove_prefix(9);
  } else if (s.starts_with("c:")) {
    s.remove_prefix(2);
  }
  s = detail::trim(s);
  std::optional<long> declared;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    auto head = detail::trim(s.substr(0, colon));
    if (!detail::is_integer_literal(head)) throw Error(ErrorCode::parse_error, "malformed degree '" + std::string(head) + "'");
    declared = std::stol(std::string(head));
    s = s.substr(colon + 1);
  }
  auto values = parse_rational_list(s);
  if (values.empty()) throw Error(ErrorCode::parse_error, "form has no coefficients");
  if (declared && *declared + 1 != static_cast<long>(values.size())) {
    throw Error(ErrorCode::parse_error, "degree " + std::to_string(*declared) + " needs " +
                                            std::to_string(*declared + 1) + " coefficients, got " +
                                            std::to_string(values.size()));
  }
  out.form = out.convention == CoeffConvention::monomial ? from_monomial_coeffs(values)
                                                          : BivariateForm(std::move(values));
  return out;
}

/// `d: c_0, c_1, ..., c_d` in normalized coefficients.
inline std::string format_form(const BivariateForm& f) {
  std::string out = std::to_string(f.degree()) + ":";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    out += k ? ", " : " ";
    out += to_string(f.coeffs()[k]);
  }
  return out;
}

/// Sparse text `coef*x^j*y^k + ...`, highest x power first; unit
/// coefficients and zero exponents are elided.
inline std::string format_dual(const DualForm& g) {
  std::string out;
  const int e = g.degree();
  for (int j = e; j >= 0; --j) {
    const Rational& c = g.coeffs()[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto append = [&mono](const char* var, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    append("x", j);
    append("y", e - j);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lorentz
