#include "oracles.hpp"

#include "qshuffle/products.hpp"
#include "qshuffle/word_expr.hpp"

#include <gtest/gtest.h>

using namespace qshuffle;

namespace {

const DiamondProduct kAdditive = DiamondProduct::additive();

NCPoly P(const char* text) { return parse_word_expr(text); }

}  // namespace

TEST(Diamond, AdditiveRule) {
  EXPECT_EQ(kAdditive(Letter(2), Letter(3)), LetterCombination(Letter(5)));
  EXPECT_TRUE(kAdditive.is_additive());
  EXPECT_FALSE(kAdditive.validate(6).has_value());
  const std::vector<LetterIndex> run{1, 2, 3};
  EXPECT_EQ(kAdditive.fold(run), LetterCombination(Letter(6)));
  const LetterCombination z = LetterCombination(Letter(2)) + LetterCombination(Letter(4));
  const LetterCombination cube = kAdditive.power(z, 3);
  EXPECT_EQ(cube.coefficient(6), Rational(1));
  EXPECT_EQ(cube.coefficient(8), Rational(3));
  EXPECT_EQ(cube.coefficient(10), Rational(3));
  EXPECT_EQ(cube.coefficient(12), Rational(1));
}

TEST(Diamond, ValidateFindsNonCommutativeRule) {
  const DiamondProduct bad("left", [](Letter a, Letter) { return LetterCombination(a); });
  EXPECT_TRUE(bad.validate(3).has_value());
  EXPECT_FALSE(bad.is_additive());
}

TEST(LetterAction, ReplacesFirstLetterAndKillsUnit) {
  const NCPoly p = P("z1z2 + 2*z3 + 5");
  EXPECT_EQ(letter_action(LetterCombination(Letter(4)), p, kAdditive), P("z5z2 + 2*z7"));
}

TEST(Products, ReferenceExamples) {
  // The six-term block-shuffle product and the stuffle of z2 and z3.
  EXPECT_EQ(block_shuffle(P("z4"), P("z3z2z2")),
            P("z4z3z2z2 + z3z4z2z2 + z3z2z4z2 + z3z2z2z4 - z9z2 - z3z8"));
  EXPECT_EQ(hoffman_quasi_shuffle(P("z2"), P("z3"), kAdditive), P("z2z3 + z3z2 + z5"));
}

TEST(Products, SmallBlockShuffles) {
  // L acting on the empty word vanishes, so length-one factors never merge.
  EXPECT_EQ(block_shuffle(P("z2"), P("z3")), P("z2z3 + z3z2"));
  EXPECT_EQ(block_shuffle(P("z2"), P("z2")), P("2*z2z2"));
  EXPECT_EQ(block_shuffle(P("z1z1"), P("z1")), P("3*z1z1z1 - z3"));
  EXPECT_EQ(shuffle(P("z1z2"), P("z3")), P("z1z2z3 + z1z3z2 + z3z1z2"));
}

TEST(Products, UnitAndZero) {
  for (const auto kind : {ProductKind::shuffle, ProductKind::quasi_shuffle, ProductKind::gen_quasi_shuffle}) {
    const ProductEngine e(kind);
    EXPECT_EQ(e.multiply(NCPoly::one(), P("z3z1")), P("z3z1"));
    EXPECT_EQ(e.multiply(P("z3z1"), NCPoly::one()), P("z3z1"));
    EXPECT_EQ(e.multiply(NCPoly::zero(), P("z3z1")), NCPoly::zero());
    EXPECT_EQ(e.power(P("z2"), 0), NCPoly::one());
  }
}

TEST(Products, AgreeWithOraclesOnAllShortPairs) {
  const ProductEngine sh(ProductKind::shuffle);
  const ProductEngine qsh(ProductKind::quasi_shuffle);
  const ProductEngine bsh(ProductKind::gen_quasi_shuffle);
  for (const auto& u : all_words_up_to(3, 3)) {
    for (const auto& v : all_words_up_to(3, 3)) {
      EXPECT_EQ(sh.multiply_words(u, v), oracle::shuffle(u, v));
      EXPECT_EQ(qsh.multiply_words(u, v), oracle::stuffle(u, v));
      EXPECT_EQ(bsh.multiply_words(u, v), oracle::block_shuffle(u, v));
    }
  }
}

TEST(Products, ShuffleCoefficientSumIsBinomial) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = oracle::random_word(rng, 4, 3);
    const Word v = oracle::random_word(rng, 4, 3);
    Rational total = 0;
    for (const auto& [w, c] : shuffle(NCPoly(u), NCPoly(v))) total += c;
    EXPECT_EQ(total, Rational(binomial(static_cast<long>(u.size() + v.size()), static_cast<long>(u.size()))));
  }
}

TEST(Products, CommutativeAndAssociative) {
  std::mt19937_64 rng(12345);
  for (const auto kind : {ProductKind::shuffle, ProductKind::quasi_shuffle, ProductKind::gen_quasi_shuffle}) {
    const ProductEngine e(kind);
    for (int trial = 0; trial < 25; ++trial) {
      const NCPoly a = oracle::random_poly(rng, 2, 3, 3);
      const NCPoly b = oracle::random_poly(rng, 2, 3, 3);
      const NCPoly c = oracle::random_poly(rng, 2, 2, 3);
      EXPECT_EQ(e.multiply(a, b), e.multiply(b, a)) << to_string(kind);
      EXPECT_EQ(e.multiply(e.multiply(a, b), c), e.multiply(a, e.multiply(b, c))) << to_string(kind);
    }
  }
}

TEST(Products, ConserveIndexSum) {
  std::mt19937_64 rng(99);
  const ProductEngine bsh(ProductKind::gen_quasi_shuffle);
  for (int trial = 0; trial < 50; ++trial) {
    const Word u = oracle::random_word(rng, 4, 5);
    const Word v = oracle::random_word(rng, 4, 5);
    for (const auto& [w, c] : bsh.multiply_words(u, v)) EXPECT_EQ(w.index_sum(), u.index_sum() + v.index_sum());
  }
}

TEST(Products, StuffleMatchesTruncatedSums) {
  // Harmonic products hold exactly for sums truncated at any N.
  const unsigned cutoff = 7;
  for (const auto& u : all_words_up_to(3, 2)) {
    if (u.empty()) continue;
    for (const auto& v : all_words_up_to(3, 2)) {
      if (v.empty()) continue;
      const auto idx = [](const Word& w) { return std::vector<std::uint32_t>(w.begin(), w.end()); };
      Rational rhs = 0;
      for (const auto& [w, c] : hoffman_quasi_shuffle(NCPoly(u), NCPoly(v), kAdditive)) {
        rhs += c * oracle::truncated_zeta(idx(w), cutoff);
      }
      EXPECT_EQ(oracle::truncated_zeta(idx(u), cutoff) * oracle::truncated_zeta(idx(v), cutoff), rhs)
          << u.to_string() << " * " << v.to_string();
    }
  }
}

TEST(Products, MemoIsReused) {
  const ProductEngine e(ProductKind::gen_quasi_shuffle);
  const NCPoly first = e.multiply(P("z1z2z3"), P("z2z1"));
  const std::size_t size = e.memo_size();
  EXPECT_GT(size, 0u);
  EXPECT_EQ(e.multiply(P("z1z2z3"), P("z2z1")), first);
  EXPECT_EQ(e.memo_size(), size);
}

TEST(Products, CustomDiamond) {
  // z_m <> z_n = z_max(m,n) is commutative and associative.
  const DiamondProduct maxd("max", [](Letter a, Letter b) { return LetterCombination(std::max(a, b)); });
  EXPECT_FALSE(maxd.validate(5).has_value());
  EXPECT_EQ(hoffman_quasi_shuffle(P("z1"), P("z2"), maxd), P("z1z2 + z2z1 + z2"));
  EXPECT_EQ(gen_quasi_shuffle(P("z1z1"), P("z2"), maxd), P("z1z1z2 + z1z2z1 + z2z1z1 - z2"));
}
