#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nsmooth/polynomial.hpp"

namespace nsmooth {

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        pos(position),
        what_short(message) {}
  std::size_t pos;
  std::string what_short;
};

struct ParseOptions {
  // Rejects exponent 1 on either variable (operator inputs require m, n != 1).
  bool strict_exponents = true;
  // Rejects input whose terms cancel to the zero polynomial.
  bool reject_zero = true;
};

// Grammar:
//   expr := term (('+'|'-') term)*
//   term := coeff ('*'? var)* | var ('*' var)*
//   var  := ('t1'|'t2') ('^' uint)?
//   coeff := int | int '/' uint | decimal
// Whitespace is insignificant. Repeated variables multiply; coefficients for
// equal exponent pairs sum; zero-sum terms are dropped.
Polynomial parse_polynomial(std::string_view text, ParseOptions opt = {});

}  // namespace nsmooth
