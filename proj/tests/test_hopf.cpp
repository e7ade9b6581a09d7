#include "oracles.hpp"

#include "qshuffle/hopf.hpp"
#include "qshuffle/products.hpp"
#include "qshuffle/word_expr.hpp"

#include <gtest/gtest.h>

using namespace qshuffle;

TEST(Hopf, DeconcatenationAndCounit) {
  const TensorPoly d = delta_decon(NCPoly(Word{1, 2}));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.coefficient(Word{}, Word{1, 2}), Rational(1));
  EXPECT_EQ(d.coefficient(Word{1}, Word{2}), Rational(1));
  EXPECT_EQ(d.coefficient(Word{1, 2}, Word{}), Rational(1));
  EXPECT_EQ(counit(parse_word_expr("3 + z1")), Rational(3));
}

TEST(Hopf, DeconcatenationIsCoassociative) {
  for (const auto& w : all_words_up_to(2, 4)) {
    const TensorPoly d = delta_decon(NCPoly(w));
    // Count (a|b|c) splittings both ways: every triple appears once.
    std::size_t left = 0;
    for (const auto& [k, c] : d) left += delta_decon(NCPoly(k.first)).size();
    std::size_t right = 0;
    for (const auto& [k, c] : d) right += delta_decon(NCPoly(k.second)).size();
    EXPECT_EQ(left, right);
    EXPECT_EQ(left, (w.size() + 1) * (w.size() + 2) / 2);
  }
}

TEST(Hopf, DeconcatenationIsStarHomomorphism) {
  const ProductEngine engine(ProductKind::gen_quasi_shuffle);
  for (const auto& u : all_words_up_to(3, 4)) {
    for (const auto& v : all_words_up_to(3, 4 - u.size())) {
      EXPECT_TRUE(check_delta_star_homomorphism(u, v, engine)) << u.to_string() << " " << v.to_string();
    }
  }
}

TEST(Hopf, DeconcatenationIsShuffleHomomorphism) {
  const ProductEngine engine(ProductKind::shuffle);
  for (const auto& u : all_words_up_to(2, 3)) {
    for (const auto& v : all_words_up_to(2, 3)) EXPECT_TRUE(check_delta_star_homomorphism(u, v, engine));
  }
}

TEST(Hopf, Antipode) {
  EXPECT_EQ(antipode(parse_word_expr("z1z2 + z3")), parse_word_expr("z2z1 - z3"));
  const ProductEngine engine(ProductKind::gen_quasi_shuffle);
  for (const auto& w : all_words_up_to(3, 5)) {
    if (w.empty()) continue;
    EXPECT_TRUE(check_antipode(w, engine)) << w.to_string();
  }
  EXPECT_THROW(check_antipode(Word{}, engine), std::invalid_argument);
}

TEST(Hopf, AntipodeFailsForStuffle) {
  // The reversal antipode is specific to products built from concatenation
  // and L-actions; Hoffman's stuffle needs a different one.
  const ProductEngine engine(ProductKind::quasi_shuffle);
  EXPECT_FALSE(check_antipode(Word{1, 1}, engine));
}

TEST(Hopf, PsiTanhCommutesWithDeconcatenation) {
  EXPECT_TRUE(check_psi_hopf_compat(4, 4));
  EXPECT_FALSE(find_psi_hopf_counterexample(4, 3).has_value());
}

TEST(Hopf, QmIdentity) {
  for (long s = 2; s <= 8; ++s) {
    for (long r = 1; r < s; ++r) {
      for (long m = 1; m <= r; ++m) EXPECT_EQ(q_m_identity(r, s, m), Rational(0)) << r << " " << s << " " << m;
    }
  }
  // m = 0 gives 1/(s - r), not zero.
  EXPECT_EQ(q_m_identity(2, 5, 0), Rational(1, 3));
  EXPECT_THROW(q_m_identity(3, 2, 1), std::domain_error);
}

TEST(Hopf, DeltaBlLetters) {
  // z2: the k = 0 terms only; z3 adds -(z1 (x) z1z1 + z1z1 (x) z1).
  const TensorPoly d2 = delta_bl_letter(Letter(2));
  EXPECT_EQ(d2, TensorPoly(Word{}, Word{2}) + TensorPoly(Word{2}, Word{}));
  const TensorPoly d3 = delta_bl_letter(Letter(3));
  EXPECT_EQ(d3.coefficient(Word{1}, Word{1, 1}), Rational(-1));
  EXPECT_EQ(d3.coefficient(Word{1, 1}, Word{1}), Rational(-1));
  EXPECT_EQ(d3.size(), 4u);
}

TEST(Hopf, DeltaBlOnLettersIsDualToStar) {
  // <Delta_bl(z_n), u (x) v> = <z_n, u * v> for nonempty u, v.
  const ProductEngine engine(ProductKind::gen_quasi_shuffle);
  for (LetterIndex n = 2; n <= 7; ++n) {
    const TensorPoly d = delta_bl_letter(Letter(n));
    for (const auto& u : all_words_up_to(n, 4)) {
      for (const auto& v : all_words_up_to(n, 4)) {
        if (u.empty() || v.empty() || u.index_sum() + v.index_sum() != n) continue;
        EXPECT_EQ(d.coefficient(u, v), engine.multiply_words(u, v).coefficient(Word{n}))
            << "z" << n << ": " << u.to_string() << " (x) " << v.to_string();
      }
    }
  }
}

TEST(Hopf, DeltaBlRequiresAdditiveDiamond) {
  const DiamondProduct maxd("max", [](Letter a, Letter b) { return LetterCombination(std::max(a, b)); });
  EXPECT_THROW(delta_bl(NCPoly(Word{2}), maxd), std::invalid_argument);
}

TEST(Hopf, PhiIsPrimitive) {
  EXPECT_EQ(phi(Letter(3)), parse_word_expr("z3 + 1/3*z1z1z1"));
  for (LetterIndex n = 1; n <= 8; ++n) EXPECT_TRUE(check_phi_primitive(Letter(n), n)) << n;
  EXPECT_TRUE(phi_primitive_defect(Letter(3)).is_zero());
}

TEST(Hopf, TensorHelpers) {
  const TensorPoly t = TensorPoly(Word{1}, Word{2, 3}, 2) + TensorPoly(Word{}, Word{4});
  EXPECT_EQ(t.swapped().coefficient(Word{2, 3}, Word{1}), Rational(2));
  EXPECT_EQ(t.bidegree_component(1, 2).size(), 1u);
  EXPECT_EQ(tensor_concat(TensorPoly::one(), t), t);
  EXPECT_EQ(t.to_string(), "1(x)z4 + 2*z1(x)z2z3");
}
