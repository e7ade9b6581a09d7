#pragma once

#include "qshuffle/ncpoly.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace qshuffle {

/// A word in {e0, e1}; bits hold 0 for e0 and 1 for e1.
struct BinaryWord {
  std::vector<std::uint8_t> bits;

  BinaryWord() = default;
  BinaryWord(std::initializer_list<std::uint8_t> b);
  explicit BinaryWord(std::vector<std::uint8_t> b);

  [[nodiscard]] std::size_t size() const { return bits.size(); }
  [[nodiscard]] bool empty() const { return bits.empty(); }
  /// Starts with e0 and ends with e1.
  [[nodiscard]] bool integral_shaped() const;
  /// Integral-shaped with interior starting in e1 and ending in e0 (or empty).
  [[nodiscard]] bool convergent() const;
  [[nodiscard]] BinaryWord interior() const;

  auto operator<=>(const BinaryWord&) const = default;
  bool operator==(const BinaryWord&) const = default;

  /// "e0e1e0e1"
  [[nodiscard]] std::string to_string() const;
  /// Parses "0101" or "e0e1e0e1".
  static BinaryWord parse(const std::string& text);
};

/// (n_1, ..., n_r) indexing zeta(n_1, ..., n_r); the empty index stands for 1.
struct MZVIndex {
  std::vector<std::uint32_t> entries;

  MZVIndex() = default;
  MZVIndex(std::initializer_list<std::uint32_t> e);
  explicit MZVIndex(std::vector<std::uint32_t> e);

  [[nodiscard]] std::uint64_t weight() const;
  [[nodiscard]] std::size_t depth() const { return entries.size(); }
  /// Empty, or last entry >= 2.
  [[nodiscard]] bool convergent() const;

  auto operator<=>(const MZVIndex&) const = default;
  bool operator==(const MZVIndex&) const = default;

  /// "(2,1,3)"
  [[nodiscard]] std::string to_string() const;
};

/// (n_1..n_r) -> e0 e1 e0^{n_1-1} ... e1 e0^{n_r-1} e1.
BinaryWord phi_index(const MZVIndex& idx);

/// Block decomposition of a word starting with e0: the block lengths as a z-word.
BinaryWord z_word_to_binary(const Word& w);
Word block_decompose(const BinaryWord& b);

/// Inverse of phi_index; throws std::invalid_argument unless b.convergent().
MZVIndex binary_to_index(const BinaryWord& b);

/// True iff the binary word of w ends in e0 (its iterated integral runs
/// from 0 back to 0 and vanishes).
bool parity_vanishes(const Word& w);
/// Arithmetic form of the same test: index sum == length (mod 2).
bool parity_vanishes_arithmetic(const Word& w);

using BinaryPoly = std::map<BinaryWord, Rational>;

void add_term(BinaryPoly& p, const BinaryWord& w, const Rational& c);

/// Shuffle product of binary words as formal sums.
BinaryPoly shuffle_binary(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v);

/// Shuffle regularization of an integral-shaped binary word, as a
/// polynomial in T whose coefficients are combinations of convergent words.
/// Both single-letter integrals regularize to T.
struct RegularizedWord {
  std::vector<BinaryPoly> by_t_degree;

  /// The T = 0 value.
  [[nodiscard]] const BinaryPoly& at_zero() const { return by_t_degree.front(); }
};

RegularizedWord shuffle_regularize(const BinaryWord& b);

}  // namespace qshuffle
