#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "coisored/arith/polynomial.hpp"
#include "coisored/core/error.hpp"

namespace coisored {

/// Syntax error inside a polynomial; `column` is 1-based within the parsed text.
class PolynomialSyntaxError : public InputError {
 public:
  PolynomialSyntaxError(const std::string& msg, std::size_t column)
      : InputError(msg), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses the polynomial grammar, e.g. "3/2*q1^2*p2 - q2 + 1", over `ring`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace coisored
