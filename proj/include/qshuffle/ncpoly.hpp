#pragma once

#include "qshuffle/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qshuffle {

using LetterIndex = std::uint32_t;

/// A letter z_index of the alphabet Z = {z_1, z_2, ...}.
struct Letter {
  LetterIndex index;

  constexpr explicit Letter(LetterIndex i) : index(i) {}
  auto operator<=>(const Letter&) const = default;
};

/// A monomial in the letters of Z. The empty word is the algebra unit.
///
/// Words compare lexicographically by letter index, with a proper prefix
/// ordered before any of its extensions.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<LetterIndex> letters);
  explicit Word(std::vector<LetterIndex> letters);
  explicit Word(std::span<const LetterIndex> letters);

  static Word letter(LetterIndex index) { return Word{index}; }

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] LetterIndex operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] LetterIndex front() const { return letters_.front(); }
  [[nodiscard]] LetterIndex back() const { return letters_.back(); }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }
  [[nodiscard]] std::span<const LetterIndex> letters() const { return letters_; }

  /// Sum of the letter indices.
  [[nodiscard]] std::uint64_t index_sum() const;

  /// Letters [pos, pos + count).
  [[nodiscard]] Word subword(std::size_t pos, std::size_t count) const;
  [[nodiscard]] Word tail() const { return subword(1, size() - 1); }
  [[nodiscard]] Word reversed() const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

  /// "z1z2z3", or "1" for the empty word.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<LetterIndex> letters_;
};

/// A finite rational linear combination of words. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() = default;
  NCPoly(const Word& w, const Rational& c = 1);  // NOLINT: implicit monomial

  static NCPoly one() { return NCPoly(Word{}); }
  static NCPoly zero() { return NCPoly(); }

  [[nodiscard]] const Rational& coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Longest word length; 0 for the zero polynomial.
  [[nodiscard]] std::size_t max_length() const;
  [[nodiscard]] NCPoly length_component(std::size_t length) const;
  [[nodiscard]] NCPoly index_sum_component(std::uint64_t sum) const;

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
  friend NCPoly operator*(NCPoly p, const Rational& c) { return p *= c; }
  NCPoly operator-() const;

  bool operator==(const NCPoly& rhs) const { return terms_ == rhs.terms_; }

  [[nodiscard]] std::string to_string() const;

 private:
  TermMap terms_;
};

NCPoly add(const NCPoly& p, const NCPoly& q);
NCPoly scale(const Rational& c, const NCPoly& p);

/// Bilinear extension of word juxtaposition.
NCPoly concat(const NCPoly& p, const NCPoly& q);
NCPoly concat_power(const NCPoly& p, unsigned n);

/// Prepends `w` to every word of `p`.
NCPoly prepend(const Word& w, const NCPoly& p);

/// Diagonal pairing <u, v> = delta_{u,v}, extended bilinearly.
Rational pair(const NCPoly& p, const NCPoly& q);

/// All words of length `length` over {z_1, ..., z_max_letter}.
std::vector<Word> all_words(LetterIndex max_letter, std::size_t length);
/// All words of length <= max_length, the empty word included.
std::vector<Word> all_words_up_to(LetterIndex max_letter, std::size_t max_length);

}  // namespace qshuffle
