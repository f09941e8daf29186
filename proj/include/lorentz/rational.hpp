#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lorentz/error.hpp"

namespace lorentz {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

}  // namespace detail

/// Parses `p/q` or an integer. The result is canonical (lowest terms,
/// positive denominator).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = detail::trim(s.substr(0, slash));
    den = detail::trim(s.substr(slash + 1));
  }
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den)) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view v) {
    return std::string(!v.empty() && v.front() == '+' ? v.substr(1) : v);
  };
  Integer n(strip_plus(num));
  Integer q(strip_plus(den));
  if (q == 0) {
    throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, q);
  r.canonicalize();
  return r;
}

/// `p/q` in lowest terms, or `p` when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Comma-separated list of rationals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string_view s = detail::trim(text);
  if (s.empty()) return out;
  for (auto part : detail::split(s, ',')) out.push_back(parse_rational(part));
  return out;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// (n)_k = n (n-1) ... (n-k+1); (n)_0 = 1.
inline Integer falling_factorial(long n, long k) {
  Integer out = 1;
  for (long j = 0; j < k; ++j) out *= (n - j);
  return out;
}

inline Rational power(const Rational& base, long exponent) {
  Rational out = 1;
  for (long j = 0; j < exponent; ++j) out *= base;
  return out;
}

}  // namespace lorentz
