#pragma once

#include "qshuffle/ncpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace qshuffle {

/// A finite rational combination of single letters, i.e. an element of QZ.
class LetterCombination {
 public:
  using TermMap = std::map<LetterIndex, Rational>;

  LetterCombination() = default;
  LetterCombination(Letter a, const Rational& c = 1);  // NOLINT: implicit single letter

  void add_term(LetterIndex index, const Rational& c);
  [[nodiscard]] const Rational& coefficient(LetterIndex index) const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  LetterCombination& operator+=(const LetterCombination& rhs);
  LetterCombination& operator*=(const Rational& c);
  friend LetterCombination operator+(LetterCombination a, const LetterCombination& b) { return a += b; }
  friend LetterCombination operator*(const Rational& c, LetterCombination a) { return a *= c; }

  bool operator==(const LetterCombination&) const = default;

  [[nodiscard]] NCPoly to_poly() const;
  /// Throws std::invalid_argument unless every word of `p` has length one.
  static LetterCombination from_poly(const NCPoly& p);

 private:
  TermMap terms_;
};

/// A commutative, associative bilinear product on QZ, given on pairs of
/// letters and extended bilinearly.
class DiamondProduct {
 public:
  using Rule = std::function<LetterCombination(Letter, Letter)>;

  DiamondProduct(std::string name, Rule rule);

  /// z_m <> z_n = z_{m+n}.
  static DiamondProduct additive();

  [[nodiscard]] LetterCombination operator()(Letter a, Letter b) const { return rule_(a, b); }
  [[nodiscard]] LetterCombination operator()(const LetterCombination& a, const LetterCombination& b) const;

  /// a_1 <> a_2 <> ... <> a_k for a nonempty run of letters.
  [[nodiscard]] LetterCombination fold(std::span<const LetterIndex> letters) const;

  /// The n-th <>-power of `z`, n >= 1.
  [[nodiscard]] LetterCombination power(const LetterCombination& z, unsigned n) const;

  [[nodiscard]] bool is_additive() const { return additive_; }
  [[nodiscard]] const std::string& name() const { return name_; }

  /// Checks commutativity on all letter pairs and associativity on all
  /// letter triples with indices <= bound. Returns a description of the
  /// first violation found.
  [[nodiscard]] std::optional<std::string> validate(LetterIndex bound) const;

 private:
  std::string name_;
  Rule rule_;
  bool additive_ = false;
};

}  // namespace qshuffle
