#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "skewhopf/comodule.hpp"
#include "skewhopf/error.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/io.hpp"

using namespace skewhopf;
using namespace skewhopf::testing;

namespace {

BigInt cumulative(const std::vector<BigInt>& counts) {
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

ValidatedChain random_chain(Rng& rng, int components, int max_size, int lo, int hi) {
  return validate(random_chain_spec(rng, components, max_size, lo, hi));
}

}  // namespace

TEST(OrderProperty, LetterOrderIsAStrictTotalOrder) {
  Rng rng(61);
  const auto chain = random_chain(rng, 2, 4, -2, 1);
  const auto letters = chain.alphabet();
  for (const auto& a : letters) {
    EXPECT_FALSE(letter_less(a, a));
    for (const auto& b : letters) {
      if (a == b) continue;
      EXPECT_NE(letter_less(a, b), letter_less(b, a));
      for (int t = 0; t < 3; ++t) {
        const auto c = random_letter(rng, chain);
        if (letter_less(a, b) && letter_less(b, c)) EXPECT_TRUE(letter_less(a, c));
      }
    }
  }
}

TEST(OrderProperty, WordOrderIsCompatibleWithConcatenation) {
  Rng rng(67);
  const auto chain = validate(preset("collapse-m4"));
  WordLess less;
  for (int t = 0; t < 500; ++t) {
    const auto u = random_word(rng, chain, uniform_int(rng, 0, 3));
    const auto v = random_word(rng, chain, uniform_int(rng, 0, 3));
    const auto p = random_word(rng, chain, uniform_int(rng, 0, 2));
    const auto s = random_word(rng, chain, uniform_int(rng, 0, 2));
    if (less(u, v)) EXPECT_TRUE(less(p * u * s, p * v * s));
  }
}

TEST(GeneratorProperty, SingleLettersStayDistinctNormalForms) {
  // On chains whose supremum classes have at least two elements, no letter
  // is rewritten and distinct letters stay distinct.
  Rng rng(71);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 20; ++t) {
    const auto chain = random_chain(rng, 2, 5, -2, 1);
    if (!chain.sup_ok()) continue;
    ++checked;
    const auto rules = rewrite::derive_rules(chain);
    std::set<std::string> seen;
    for (const auto& l : chain.alphabet()) {
      const auto nf = rewrite::normal_form(rules, Word(l));
      EXPECT_EQ(nf, NCPoly(l));
      EXPECT_TRUE(seen.insert(io::format_poly(nf, chain)).second);
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(RankProperty, SupportTuplesAreSubwordsOfTheFactorTuple) {
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const auto chain = random_chain(rng, 1, 4, -1, 1);
    const auto rules = rewrite::derive_rules(chain);
    for (int s = 0; s < 5; ++s) {
      std::vector<int> tuple;
      NCPoly product = NCPoly::one();
      const int factors = uniform_int(rng, 1, 3);
      for (int f = 0; f < factors; ++f) {
        const int r = uniform_int(rng, chain.lo(), chain.hi());
        tuple.push_back(r);
        product = product * random_level_element(rng, chain, r, 2);
      }
      const auto nf = rewrite::normal_form(rules, product);
      if (nf.is_zero()) continue;
      std::set<std::vector<int>> longest;
      std::size_t max_len = 0;
      for (const auto& [w, c] : nf.terms()) {
        EXPECT_TRUE(is_subsequence(w.levels(), tuple));
        max_len = std::max(max_len, w.size());
      }
      for (const auto& [w, c] : nf.terms()) {
        if (w.size() == max_len) longest.insert(w.levels());
      }
      if (longest.size() == 1) {
        EXPECT_EQ(hopf::rank(rules, nf), *longest.begin());
      } else {
        EXPECT_THROW(hopf::rank(rules, nf), Error);
      }
    }
  }
}

TEST(BasisProperty, CompletedSystemsBoundTheTruncatedQuotient) {
  // The oracle only uses relation multiples of degree <= len, while derived
  // relations may come from longer overlaps (a single index gives
  // x^{-1} = x^{-1} x^0 x^1 = x^1), so a closed completion can only count
  // fewer words; with nothing derived the two agree.
  Rng rng(79);
  int closed = 0;
  for (int t = 0; t < 20; ++t) {
    const auto chain = random_chain(rng, 1, 3, -1, 1);
    const auto result = rewrite::complete(rewrite::derive_rules(chain), 4, 8);
    if (!result.fixpoint || result.collapsed) continue;
    if (!rewrite::check_confluence(result.rules).confluent()) continue;
    ++closed;
    const std::size_t len = chain.alphabet().size() > 20 ? 2 : 3;
    const auto count = cumulative(rewrite::count_reduced_words(result.rules, len));
    const auto dim = BigInt(rewrite::oracle_dimension(chain, len));
    EXPECT_LE(count, dim);
    if (result.derived.empty()) EXPECT_EQ(count, dim);
  }
  EXPECT_GT(closed, 0);
}

TEST(BasisProperty, SingleIndexChainIdentifiesOuterLevels) {
  ChainSpec s;
  s.indices = {"1"};
  s.components = {{"1"}};
  s.lo = -1;
  s.hi = 1;
  const auto chain = validate(s);
  const auto result = rewrite::complete(rewrite::derive_rules(chain), 4, 8);
  ASSERT_TRUE(result.fixpoint);
  ASSERT_EQ(result.derived.size(), 1u);
  EXPECT_EQ(result.derived[0], io::parse_expr("x[1,1,1] - x[-1,1,1]", chain));
  // The quotient is a Laurent ring in x^0: two reduced words of each length.
  EXPECT_EQ(rewrite::count_reduced_words(result.rules, 5).back(), BigInt(2));
}

TEST(HopfProperty, CounitLawsOnRandomChains) {
  Rng rng(83);
  for (int t = 0; t < 15; ++t) {
    const auto chain = random_chain(rng, 2, 3, -1, 1);
    const auto rules = rewrite::derive_rules(chain);
    for (int s = 0; s < 5; ++s) {
      const auto p = rewrite::normal_form(rules, random_poly(rng, chain, 3, 3));
      const auto delta = hopf::comultiply(rules, p);
      EXPECT_EQ(hopf::counit_left_leg(delta), p);
      EXPECT_EQ(hopf::counit_right_leg(delta), p);
    }
    for (const auto& l : chain.alphabet()) {
      const auto delta = hopf::comultiply(rules, NCPoly(l));
      EXPECT_EQ(hopf::comultiply_left_leg(rules, delta), hopf::comultiply_right_leg(rules, delta));
      if (l.level < chain.hi()) {
        EXPECT_EQ(hopf::convolution_check(rules, l.level, l.row, l.col), std::make_pair(true, true));
      }
    }
  }
}

TEST(SpanProperty, FirstLetterBlockBoundsTheRightSpan) {
  Rng rng(89);
  for (int t = 0; t < 15; ++t) {
    const auto chain = random_chain(rng, 1, 4, -1, 0);
    const auto rules = rewrite::derive_rules(chain);
    for (int s = 0; s < 4; ++s) {
      const auto w = random_reduced_block_word(rng, rules, uniform_int(rng, 1, 3));
      const auto block = chain.blocks(w[0].level, 0).at(chain.block_of(w[0].level, w[0].row));
      EXPECT_GE(hopf::right_span_dim(rules, NCPoly(w)), block.size()) << io::format_word(w, chain);
    }
  }
}

TEST(GrowthProperty, RowsFollowBlockSizes) {
  Rng rng(97);
  for (int t = 0; t < 30; ++t) {
    const auto chain = random_chain(rng, 2, 6, -3, 0);
    const auto report = comodule::growth_report(chain);
    ASSERT_EQ(report.rows.size(), static_cast<std::size_t>(chain.hi() - chain.lo() + 1));
    for (const auto& row : report.rows) {
      std::size_t smallest = chain.index_count();
      for (std::size_t c = 0; c < chain.component_count(); ++c) {
        for (const auto& b : chain.blocks(row.r, c)) smallest = std::min(smallest, b.size());
      }
      EXPECT_EQ(row.min_simple_dim, smallest);
      EXPECT_EQ(row.sup_ok, smallest >= 2);
    }
    // Refinement upwards makes the table weakly decreasing left to right.
    for (std::size_t k = 1; k < report.rows.size(); ++k) {
      EXPECT_LE(report.rows[k].min_simple_dim, report.rows[k - 1].min_simple_dim);
    }
  }
}
