#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "skewhopf/chain.hpp"
#include "skewhopf/ncpoly.hpp"

using namespace skewhopf;
using skewhopf::testing::Rng;

namespace {

Letter L(int r, std::uint32_t i, std::uint32_t j) { return Letter{r, index_id(i), index_id(j)}; }

}  // namespace

TEST(Word, ConcatenationAndSubwords) {
  const Word a{L(0, 0, 1), L(1, 1, 1)};
  const Word b{L(0, 1, 0)};
  const Word ab = a * b;
  ASSERT_EQ(ab.size(), 3u);
  EXPECT_EQ(ab.subword(1, 2), (Word{L(1, 1, 1), L(0, 1, 0)}));
  EXPECT_TRUE(ab.contains(Word{L(1, 1, 1), L(0, 1, 0)}));
  EXPECT_FALSE(ab.contains(Word{L(0, 1, 0), L(1, 1, 1)}));
  EXPECT_EQ(ab.levels(), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(Word{} * a, a);
}

TEST(Word, LetterOrderIsParityAware) {
  // Even level: increasing in column, then row.
  EXPECT_TRUE(letter_less(L(0, 0, 0), L(0, 0, 1)));
  EXPECT_TRUE(letter_less(L(0, 1, 0), L(0, 0, 1)));
  // Odd level: decreasing.
  EXPECT_TRUE(letter_less(L(1, 0, 1), L(1, 0, 0)));
  // Levels first.
  EXPECT_TRUE(letter_less(L(-1, 3, 3), L(0, 0, 0)));
}

TEST(Word, DegreeLexOrderIsStrictTotal) {
  Rng rng(3);
  std::vector<Word> words;
  for (int t = 0; t < 200; ++t) {
    std::vector<Letter> ls;
    const int len = skewhopf::testing::uniform_int(rng, 0, 3);
    for (int k = 0; k < len; ++k) {
      ls.push_back(L(skewhopf::testing::uniform_int(rng, -1, 1), static_cast<std::uint32_t>(skewhopf::testing::uniform_int(rng, 0, 2)),
                     static_cast<std::uint32_t>(skewhopf::testing::uniform_int(rng, 0, 2))));
    }
    words.emplace_back(std::move(ls));
  }
  WordLess less;
  for (const auto& a : words) {
    EXPECT_FALSE(less(a, a));
    for (const auto& b : words) {
      if (a == b) continue;
      EXPECT_NE(less(a, b), less(b, a));
      if (a.size() < b.size()) EXPECT_TRUE(less(a, b));
      // Compatible with concatenation on both sides.
      const Word c{L(0, 1, 2)};
      if (less(a, b)) {
        EXPECT_TRUE(less(c * a, c * b));
        EXPECT_TRUE(less(a * c, b * c));
      }
    }
  }
}

TEST(NCPoly, TermsCancel) {
  NCPoly p(Word{L(0, 0, 0)}, Rational(2));
  p -= NCPoly(Word{L(0, 0, 0)}, Rational(2));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), 0u);
}

TEST(NCPoly, MultiplicationExpandsProducts) {
  const NCPoly a = NCPoly(L(0, 0, 0)) + NCPoly::constant(1);
  const NCPoly b = NCPoly(L(1, 0, 0)) - NCPoly::constant(1);
  const NCPoly ab = a * b;
  // (x + 1)(y - 1) = xy - x + y - 1
  NCPoly expected;
  expected.add_term(Word{L(0, 0, 0), L(1, 0, 0)}, 1);
  expected.add_term(Word{L(0, 0, 0)}, -1);
  expected.add_term(Word{L(1, 0, 0)}, 1);
  expected.add_term(Word{}, -1);
  EXPECT_EQ(ab, expected);
  EXPECT_EQ(ab.degree(), 2u);
  EXPECT_EQ(ab.leading_word(), (Word{L(0, 0, 0), L(1, 0, 0)}));
}

TEST(NCPolyProperty, RingLaws) {
  const auto chain = validate(preset("free-matrix"));
  Rng rng(4);
  for (int t = 0; t < 150; ++t) {
    const auto p = skewhopf::testing::random_poly(rng, chain, 3, 2);
    const auto q = skewhopf::testing::random_poly(rng, chain, 3, 2);
    const auto s = skewhopf::testing::random_poly(rng, chain, 3, 2);
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ(p * (q + s), p * q + p * s);
    EXPECT_EQ((p + q) * s, p * s + q * s);
    EXPECT_EQ(p * NCPoly::one(), p);
    EXPECT_EQ(NCPoly::one() * p, p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Tensor, AddTermMergesAndCancels) {
  TensorPoly t;
  const Word a{L(0, 0, 0)};
  const Word b{L(0, 0, 1)};
  t.add_term({a, b}, Rational(1));
  t.add_term({b, a}, Rational(1));
  t.add_term({a, b}, Rational(-1));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.terms().begin()->first, (std::array<Word, 2>{b, a}));
}
