#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/bipoly.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

/// A k×k minor M_{rows, cols} together with its determinant.
struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

/// The violated degree-j condition of a Lefschetz/Hodge–Riemann check.
struct DegreeFailure {
  int degree = 0;
  std::vector<LinearForm> points;
  Rational value;
};

/// Outcome of a named property test. Failing verdicts carry whichever
/// witness the check produces; `detail` holds free-form context such as
/// "zero form".
struct Verdict {
  std::string property;
  bool pass = false;
  std::optional<int> order;
  std::optional<MinorWitness> witness;
  std::optional<DegreeFailure> failure;
  std::string detail;

  explicit operator bool() const noexcept { return pass; }
};

}  // namespace lorentz
