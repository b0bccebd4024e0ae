#include <gtest/gtest.h>

#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "skewhopf/linalg.hpp"

using namespace skewhopf;
using skewhopf::testing::Rng;

using skewhopf::testing::dense_rank;

TEST(SparseRow, MergesDuplicatesAndDropsZeros) {
  const auto row = make_sparse_row({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}, {5, Rational(0)}});
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].first, 1u);
  EXPECT_EQ(row[0].second, Rational(2));
}

TEST(RowEchelon, DetectsDependence) {
  RowEchelon e;
  EXPECT_TRUE(e.insert(make_sparse_row({{0, Rational(1)}, {1, Rational(1)}})));
  EXPECT_TRUE(e.insert(make_sparse_row({{1, Rational(1)}, {2, Rational(1)}})));
  EXPECT_FALSE(e.insert(make_sparse_row({{0, Rational(2)}, {1, Rational(4)}, {2, Rational(2)}})));
  EXPECT_FALSE(e.insert(SparseRow{}));
  EXPECT_EQ(e.rank(), 2u);
}

TEST(RowEchelonProperty, RankMatchesDenseElimination) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int rows = skewhopf::testing::uniform_int(rng, 1, 7);
    const int cols = skewhopf::testing::uniform_int(rng, 1, 7);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
    RowEchelon e;
    for (int r = 0; r < rows; ++r) {
      std::vector<std::pair<std::uint32_t, Rational>> entries;
      for (int c = 0; c < cols; ++c) {
        // Sparse and often low rank: small integer entries, many zeros.
        if (skewhopf::testing::uniform_int(rng, 0, 2) == 0) {
          dense[r][c] = Rational(skewhopf::testing::uniform_int(rng, -2, 2));
          entries.emplace_back(static_cast<std::uint32_t>(c), dense[r][c]);
        }
      }
      e.insert(make_sparse_row(std::move(entries)));
    }
    EXPECT_EQ(e.rank(), dense_rank(dense));
  }
}
