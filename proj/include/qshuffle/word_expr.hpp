#pragma once

#include "qshuffle/ncpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qshuffle {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, whitespace ignored:
//   expr   := [sign] term (sign term)*
//   term   := coef ['*'] letters | coef | letters
//   coef   := digits ['/' digits]
//   letters:= ('z' digits)+
// A bare coefficient multiplies the empty word; "0" is the zero polynomial.
NCPoly parse_word_expr(std::string_view text);

// Single monomial with coefficient 1; throws ParseError otherwise.
Word parse_word(std::string_view text);

}  // namespace qshuffle
