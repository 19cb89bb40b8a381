#ifndef RINGGB_TEXT_FORMAT_HPP
#define RINGGB_TEXT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ringgb/polynomial.hpp"

namespace ringgb {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  // Zero-based offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Sums of products of integer or rational constants and powers of declared
// variables, e.g. "2*x^2*y - 3*y + 1" or "-1/2*x + y". '*' may be omitted
// between factors.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring);

// Descending monomials, "2*x^2*y - 3*y + 1". The zero polynomial prints "0".
std::string format_polynomial(const Polynomial& p, const PolyRing& ring);

}  // namespace ringgb

#endif  // RINGGB_TEXT_FORMAT_HPP
