#pragma once

#include "qshuffle/diamond.hpp"
#include "qshuffle/ncpoly.hpp"

#include <map>
#include <string_view>
#include <utility>

namespace qshuffle {

enum class ProductKind {
  shuffle,            // au sh bv = a(u sh bv) + b(au sh v)
  quasi_shuffle,      // ... + (a<>b)(u * v)           (Hoffman)
  gen_quasi_shuffle,  // ... - L_{a<>b}(u * v)         (block shuffle for the additive diamond)
};

std::string_view to_string(ProductKind kind);

/// L_a: replaces the first letter x of every word by a<>x; kills the empty word.
NCPoly letter_action(const LetterCombination& a, const NCPoly& p, const DiamondProduct& d);

/// Evaluates one of the word products, memoizing on word pairs.
///
/// The memo table lives in the engine; an engine must not be shared between
/// threads without external synchronization. Reuse one engine across many
/// multiplications to amortize the recursion.
class ProductEngine {
 public:
  explicit ProductEngine(ProductKind kind, DiamondProduct diamond = DiamondProduct::additive());

  [[nodiscard]] NCPoly multiply(const NCPoly& p, const NCPoly& q) const;
  [[nodiscard]] const NCPoly& multiply_words(const Word& u, const Word& v) const;
  /// p^n under this product; p^0 = 1.
  [[nodiscard]] NCPoly power(const NCPoly& p, unsigned n) const;

  [[nodiscard]] ProductKind kind() const { return kind_; }
  [[nodiscard]] const DiamondProduct& diamond() const { return diamond_; }
  [[nodiscard]] std::size_t memo_size() const { return memo_.size(); }

 private:
  ProductKind kind_;
  DiamondProduct diamond_;
  mutable std::map<std::pair<Word, Word>, NCPoly> memo_;
};

NCPoly shuffle(const NCPoly& u, const NCPoly& v);
NCPoly hoffman_quasi_shuffle(const NCPoly& u, const NCPoly& v, const DiamondProduct& d);
NCPoly gen_quasi_shuffle(const NCPoly& u, const NCPoly& v, const DiamondProduct& d);
/// gen_quasi_shuffle with the additive diamond.
NCPoly block_shuffle(const NCPoly& u, const NCPoly& v);

}  // namespace qshuffle
