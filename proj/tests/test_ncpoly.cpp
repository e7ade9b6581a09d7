#include "oracles.hpp"

#include "qshuffle/json_io.hpp"
#include "qshuffle/ncpoly.hpp"
#include "qshuffle/word_expr.hpp"

#include <gtest/gtest.h>

using namespace qshuffle;

TEST(Word, RejectsZeroIndex) { EXPECT_THROW(Word({1, 0, 2}), std::invalid_argument); }

TEST(Word, BasicOperations) {
  const Word w{4, 3, 2, 2};
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.index_sum(), 11u);
  EXPECT_EQ(w.tail(), Word({3, 2, 2}));
  EXPECT_EQ(w.subword(1, 2), Word({3, 2}));
  EXPECT_EQ(w.reversed(), Word({2, 2, 3, 4}));
  EXPECT_EQ(Word({4}) + Word({3, 2, 2}), w);
  EXPECT_EQ(w.to_string(), "z4z3z2z2");
  EXPECT_EQ(Word{}.to_string(), "1");
}

TEST(Word, PrefixOrdersFirst) {
  EXPECT_LT(Word({1}), Word({1, 1}));
  EXPECT_LT(Word({1, 2}), Word({2}));
  EXPECT_LT(Word{}, Word({1}));
}

TEST(NCPoly, ZeroCoefficientsAreDropped) {
  NCPoly p(Word{2, 3}, Rational(1, 2));
  p.add_term(Word{2, 3}, Rational(-1, 2));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, NCPoly::zero());
  EXPECT_EQ(NCPoly(Word{1}, 0).size(), 0u);
}

TEST(NCPoly, Arithmetic) {
  const NCPoly a = parse_word_expr("z1 + 2*z2");
  const NCPoly b = parse_word_expr("z2 - z3");
  EXPECT_EQ(a + b, parse_word_expr("z1 + 3*z2 - z3"));
  EXPECT_EQ(a - a, NCPoly::zero());
  EXPECT_EQ(Rational(1, 2) * a, parse_word_expr("1/2*z1 + z2"));
  EXPECT_EQ(concat(a, b), parse_word_expr("z1z2 - z1z3 + 2*z2z2 - 2*z2z3"));
  EXPECT_EQ(concat_power(a, 0), NCPoly::one());
  EXPECT_EQ(concat_power(NCPoly(Word{2}), 3), NCPoly(Word{2, 2, 2}));
  EXPECT_EQ(pair(a, b), Rational(2));
}

TEST(NCPoly, Components) {
  const NCPoly p = parse_word_expr("z1z1 + z2 + 3*z1z2z1 - 1");
  EXPECT_EQ(p.max_length(), 3u);
  EXPECT_EQ(p.length_component(1), parse_word_expr("z2"));
  EXPECT_EQ(p.index_sum_component(2), parse_word_expr("z1z1 + z2"));
  EXPECT_EQ(p.coefficient(Word{}), Rational(-1));
}

TEST(NCPoly, Rendering) {
  EXPECT_EQ(parse_word_expr("z1z2 - 1/3*z6").to_string(), "z1z2 - 1/3*z6");
  EXPECT_EQ(NCPoly::one().to_string(), "1");
  EXPECT_EQ(NCPoly::zero().to_string(), "0");
  EXPECT_EQ(parse_word_expr("-z2").to_string(), "-z2");
}

TEST(AllWords, Counts) {
  EXPECT_EQ(all_words(3, 4).size(), 81u);
  EXPECT_EQ(all_words_up_to(2, 3).size(), 15u);
}

TEST(WordExpr, Examples) {
  EXPECT_EQ(parse_word_expr("z4 z3 z2 z2"), NCPoly(Word{4, 3, 2, 2}));
  const NCPoly three = parse_word_expr("z2z3 + z3z2 - z5");
  EXPECT_EQ(three.size(), 3u);
  EXPECT_EQ(three.coefficient(Word{5}), Rational(-1));
  EXPECT_EQ(parse_word_expr("1/3*z6"), NCPoly(Word{6}, Rational(1, 3)));
  EXPECT_EQ(parse_word_expr("1"), NCPoly::one());
  EXPECT_EQ(parse_word_expr("0"), NCPoly::zero());
  EXPECT_EQ(parse_word_expr("z12z1"), NCPoly(Word{12, 1}));
  EXPECT_EQ(parse_word_expr("2z3"), NCPoly(Word{3}, 2));
  EXPECT_EQ(parse_word_expr(" - 2 / 4 * z1 "), NCPoly(Word{1}, Rational(-1, 2)));
}

TEST(WordExpr, ErrorsCarryPositions) {
  const auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_word_expr(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(position_of("z0"), 1u);
  EXPECT_EQ(position_of("z2 + z0z1"), 6u);
  EXPECT_EQ(position_of("z2 z"), 4u);
  EXPECT_EQ(position_of("z2 x"), 3u);
  EXPECT_EQ(position_of("z2 z3 +"), 7u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("1/0*z1"), 2u);
  EXPECT_THROW(parse_word("z1 + z2"), ParseError);
  EXPECT_THROW(parse_word("2*z1"), ParseError);
  EXPECT_EQ(parse_word("1"), Word{});
}

TEST(WordExpr, RenderRoundTrip) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const NCPoly p = oracle::random_poly(rng, 1 + rng() % 6, 4, 12);
    EXPECT_EQ(parse_word_expr(p.to_string()), p) << p.to_string();
  }
}

TEST(Json, NCPolyShapeAndRoundTrip) {
  const NCPoly p = parse_word_expr("z2z3 - 1/3*z6 + 2");
  const Json j = to_json(p);
  ASSERT_TRUE(j.contains("terms"));
  for (const auto& t : j["terms"]) {
    EXPECT_TRUE(t["coef"].is_string());
    EXPECT_NE(t["coef"].get<std::string>().find('/'), std::string::npos);
    EXPECT_TRUE(t["word"].is_array());
  }
  EXPECT_EQ(ncpoly_from_json(j), p);
  EXPECT_EQ(ncpoly_from_json(Json::parse(j.dump())), p);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const NCPoly q = oracle::random_poly(rng, 5, 4, 9);
    EXPECT_EQ(ncpoly_from_json(to_json(q)), q);
  }
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(ncpoly_from_json(Json::parse(R"({"terms": 3})")), std::invalid_argument);
  EXPECT_THROW(ncpoly_from_json(Json::parse(R"({"terms": [{"coef": "1", "word": [0]}]})")), std::invalid_argument);
  EXPECT_THROW(ncpoly_from_json(Json::parse(R"({"terms": [{"coef": 1, "word": [1]}]})")), std::invalid_argument);
}

TEST(Rational, FractionStrings) {
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(12), 479001600);
}
