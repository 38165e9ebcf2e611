#pragma once

#include <string>
#include <string_view>

#include "nullkit/nullstellensatz.hpp"

namespace nullkit {

/// A parsed `.null` file:
///
///   # comment
///   field GF(2)          (alias: base)
///   coeffs GF(4)         optional, defaults to the base field
///   points GF(2)         optional, defaults to the base field
///   vars X0 X1
///   ideal: X0*X1,
///          X1^2 + X0*X1  (indented lines continue the previous entry)
///
/// The ring lives over `coeffs`; zero sets are taken over `points`.
struct Problem {
  FieldPtr base;
  FieldPtr coeffs;
  FieldPtr points;
  RingPtr ring;
  Ideal ideal;

  NullConfig config(VanishingMethod method = VanishingMethod::Colon) const { return {points, method}; }
  /// Canonical text; parse_problem(emit()) reproduces the same problem.
  std::string emit() const;
};

/// Errors are SyntaxError ("line L, column C: ...") or InconsistentTower when
/// base does not embed into coeffs and points, or when neither of coeffs and
/// points contains the other.
Problem parse_problem(std::string_view text);

/// Reads and parses a file; a missing file is an InvalidArgument.
Problem load_problem(const std::string& path);

}  // namespace nullkit
