#pragma once

#include "qshuffle/diamond.hpp"
#include "qshuffle/ncpoly.hpp"
#include "qshuffle/products.hpp"

#include <map>
#include <string>
#include <vector>

namespace qshuffle {

bool is_lyndon(const Word& w);

/// Lyndon words of exactly `length` letters over {z_1..z_max_letter}, in
/// lexicographic order (Duval's generation algorithm).
std::vector<Word> lyndon_words(LetterIndex max_letter, std::size_t length);

/// Lyndon words with letter-index sum `weight` (letter z_i has weight i).
std::vector<Word> lyndon_words_of_weight(std::uint32_t weight);

/// Chen-Fox-Lyndon factorization: the unique non-increasing sequence of
/// Lyndon words concatenating to w. Throws on the empty word.
std::vector<Word> cfl_factorize(const Word& w);

/// A rational combination of products of Lyndon words. Each key is the
/// sorted multiset of factors; the empty multiset stands for 1.
struct LyndonBasisExpr {
  ProductKind product = ProductKind::shuffle;
  std::map<std::vector<Word>, Rational> terms;

  void add_term(std::vector<Word> factors, const Rational& c);
  [[nodiscard]] std::string to_string() const;
};

/// Multiplies out every term under the tagged product.
NCPoly expand(const LyndonBasisExpr& expr, const DiamondProduct& d = DiamondProduct::additive());

/// Writes p as a shuffle polynomial in Lyndon words.
LyndonBasisExpr decompose_shuffle(const NCPoly& p);

/// Writes p as a generalised quasi-shuffle polynomial in Lyndon words.
LyndonBasisExpr decompose_star(const NCPoly& p, const DiamondProduct& d = DiamondProduct::additive());

int mobius(std::uint64_t n);

enum class LyndonGrading { by_length, by_weight };

/// Number of Lyndon words in degree n, from the Poincare series of the
/// chosen grading via Moebius inversion. `letters` is the alphabet size for
/// the length grading and ignored for the weight grading.
Integer lyndon_count(LyndonGrading grading, std::uint32_t n, std::uint32_t letters = 0);

/// L_n = (1/n) sum_{d | n} mu(n/d) c_d, where sum c_n x^n = x d/dx log Z(x)
/// and dims[k] = dim Z_k (dims[0] must be 1).
Integer lyndon_count_from_dimensions(const std::vector<Integer>& dims, std::uint32_t n);

}  // namespace qshuffle
