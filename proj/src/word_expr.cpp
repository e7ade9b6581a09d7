#include "qshuffle/word_expr.hpp"

#include <cctype>

namespace qshuffle {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NCPoly expr() {
    NCPoly out;
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      const auto [w, c] = term();
      out.add_term(w, sign * c);
      skip_space();
    }
    return out;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Word, Rational> term() {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    Rational coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string den = digits();
        if (Integer(den) == 0) throw ParseError("zero denominator", den_pos);
        num += "/" + den;
      }
      coef = parse_rational(num);
      has_coef = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'z') throw ParseError("expected a letter after '*'", pos_);
      }
    }
    std::vector<LetterIndex> letters;
    while (true) {
      skip_space();
      if (at_end() || peek() != 'z') break;
      ++pos_;
      const std::size_t index_pos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a letter index after 'z'", index_pos);
      }
      const std::string idx = digits();
      const unsigned long value = idx.size() > 9 ? 0 : std::stoul(idx);
      if (value == 0) throw ParseError("letter index must be a positive integer", index_pos);
      letters.push_back(static_cast<LetterIndex>(value));
    }
    if (!has_coef && letters.empty()) throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return {Word(std::move(letters)), coef};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_word_expr(std::string_view text) { return Parser(text).expr(); }

Word parse_word(std::string_view text) {
  const NCPoly p = parse_word_expr(text);
  if (p.size() != 1 || p.begin()->second != 1) throw ParseError("expected a single word", 0);
  return p.begin()->first;
}

}  // namespace qshuffle
