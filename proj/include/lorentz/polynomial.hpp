#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// Univariate polynomial with rational coefficients, ascending powers,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  /// t - root
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, 1}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Rational> d(c_);
    Rational lead = leading();
    for (auto& v : d) v /= lead;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> d(p.c_);
    for (auto& v : d) v *= s;
    return Polynomial(std::move(d));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Euclidean division a = q b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / b.leading();
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd (zero if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free decomposition: p = lc * prod_k factors[k]^(k+1), with
/// each factor square-free and pairwise coprime (possibly constant 1).
inline std::vector<Polynomial> square_free_factors(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::invalid_argument, "square-free decomposition of zero");
  std::vector<Polynomial> out;
  Polynomial a = p.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = divmod(a, c).first;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    out.push_back(divmod(w, y).first);
    w = y;
    c = divmod(c, y).first;
  }
  return out;
}

/// Sturm chain p, p', -rem(p, p'), ...
inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

namespace detail {

// Sign changes of the chain at t, or at -inf/+inf when t is empty.
inline int sign_changes(const std::vector<Polynomial>& seq, const std::optional<Rational>& t, bool plus_infinity) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s;
    if (t) {
      s = sgn(q(*t));
    } else {
      s = sgn(q.leading());
      if (!plus_infinity && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Distinct real roots in (lo, hi]; empty bounds stand for ∓infinity.
inline int count_distinct_roots(const Polynomial& p, const std::optional<Rational>& lo,
                                const std::optional<Rational>& hi) {
  if (p.is_zero()) throw Error(ErrorCode::invalid_argument, "root count of the zero polynomial");
  const auto seq = sturm_sequence(p);
  return detail::sign_changes(seq, lo, false) - detail::sign_changes(seq, hi, true);
}

}  // namespace lorentz
