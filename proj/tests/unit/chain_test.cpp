#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "skewhopf/chain.hpp"
#include "skewhopf/error.hpp"

using namespace skewhopf;
using skewhopf::testing::Rng;

namespace {

ErrorCode code_of(const ChainSpec& spec) {
  try {
    validate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "validation unexpectedly succeeded";
  return ErrorCode::BadParams;
}

ChainSpec four_indices() {
  ChainSpec s;
  s.indices = {"1", "2", "3", "4"};
  s.components = {{"1", "2", "3", "4"}};
  s.lo = -1;
  s.hi = 1;
  return s;
}

std::vector<std::vector<std::string>> names(const ValidatedChain& chain, const std::vector<std::vector<IndexId>>& ids) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : ids) {
    std::vector<std::string> n;
    for (auto id : cls) n.push_back(chain.name(id));
    out.push_back(n);
  }
  return out;
}

// Presence read off the ChainSpec's listed blocks, independently of the
// validated tables: position of the block containing each index.
bool presence_from_spec(const ChainSpec& spec, int r, const std::string& i, const std::string& j) {
  const LevelBlocks* level = nullptr;
  for (const auto& l : spec.levels) {
    if (l.r <= r && (!level || l.r > level->r)) level = &l;
  }
  auto comp_of = [&](const std::string& x) {
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
      if (std::find(spec.components[c].begin(), spec.components[c].end(), x) != spec.components[c].end()) return c;
    }
    return spec.components.size();
  };
  if (comp_of(i) != comp_of(j)) return false;
  if (!level) return true;  // one block per component
  auto rank_of = [&](const std::string& x) {
    // Blocks of one component listed in order; count earlier blocks of that component.
    std::size_t rank = 0;
    for (const auto& block : level->blocks) {
      if (comp_of(block.front()) != comp_of(x)) continue;
      if (std::find(block.begin(), block.end(), x) != block.end()) return rank;
      ++rank;
    }
    return rank;
  };
  return r % 2 == 0 ? rank_of(i) <= rank_of(j) : rank_of(i) >= rank_of(j);
}

}  // namespace

TEST(ChainValidation, RejectsEmptyWindow) {
  auto s = four_indices();
  s.lo = 2;
  s.hi = 1;
  EXPECT_EQ(code_of(s), ErrorCode::EmptyWindow);
}

TEST(ChainValidation, RejectsDuplicateIndex) {
  auto s = four_indices();
  s.indices.push_back("2");
  EXPECT_EQ(code_of(s), ErrorCode::DuplicateIndex);
  s = four_indices();
  s.levels = {{0, {{"1", "2"}, {"2", "3", "4"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::DuplicateIndex);
}

TEST(ChainValidation, RejectsUnknownIndex) {
  auto s = four_indices();
  s.levels = {{0, {{"1", "2"}, {"3", "5"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::UnknownIndex);
}

TEST(ChainValidation, RejectsNonIntervalBlocks) {
  auto s = four_indices();
  s.levels = {{0, {{"1", "3"}, {"2", "4"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::NonIntervalBlock);
}

TEST(ChainValidation, RejectsCoarseningUpward) {
  auto s = four_indices();
  s.levels = {{-1, {{"1", "2"}, {"3", "4"}}}, {0, {{"1", "2", "3", "4"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::NonRefining);
}

TEST(ChainValidation, RejectsIncompleteOrRepeatedLevels) {
  auto s = four_indices();
  s.levels = {{0, {{"1", "2"}, {"3"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::BadPartition);
  s = four_indices();
  s.levels = {{0, {{"1", "2"}, {"3", "4"}}}, {0, {{"1", "2"}, {"3", "4"}}}};
  EXPECT_EQ(code_of(s), ErrorCode::BadPartition);
}

TEST(ChainValidation, UnlistedLevelsInheritFromBelow) {
  auto s = four_indices();
  s.levels = {{0, {{"1", "2"}, {"3", "4"}}}};
  const auto chain = validate(s);
  EXPECT_EQ(chain.block_count(-1, 0), 1u);
  EXPECT_EQ(chain.block_count(0, 0), 2u);
  EXPECT_EQ(chain.block_count(1, 0), 2u);
  EXPECT_THROW(chain.block_count(2, 0), Error);
}

TEST(ChainPresets, CollapseShape) {
  const auto spec = preset("collapse-m4");
  const auto chain = validate(spec);
  EXPECT_EQ(chain.lo(), -1);
  EXPECT_EQ(chain.hi(), 1);
  EXPECT_EQ(chain.letters(-1).size(), 16u);
  EXPECT_EQ(chain.letters(0).size(), 12u);
  EXPECT_EQ(chain.letters(1).size(), 12u);
  EXPECT_EQ(names(chain, chain.sup_partition().classes),
            (std::vector<std::vector<std::string>>{{"1", "2"}, {"3", "4"}}));
  EXPECT_TRUE(chain.sup_ok());
  EXPECT_TRUE(chain.warnings().empty());
  // Level 0 is upper triangular: x[0,1,3] present, x[0,3,1] absent.
  const auto one = *chain.find("1");
  const auto three = *chain.find("3");
  EXPECT_TRUE(chain.present(0, one, three));
  EXPECT_FALSE(chain.present(0, three, one));
  EXPECT_TRUE(chain.present(1, three, one));
  EXPECT_FALSE(chain.present(1, one, three));
}

TEST(ChainPresets, Needge2WarnsAboutSingletons) {
  const auto chain = validate(preset("needge2"));
  EXPECT_EQ(names(chain, chain.sup_partition().classes), (std::vector<std::vector<std::string>>{{"1"}, {"2"}}));
  EXPECT_FALSE(chain.sup_ok());
  ASSERT_EQ(chain.warnings().size(), 1u);
  EXPECT_EQ(warning_code_name(chain.warnings()[0].code), "SUP_CLASS_TOO_SMALL");
}

TEST(ChainPresets, FreeMatrixDefaultsAndParameters) {
  const auto chain = validate(preset("free-matrix"));
  EXPECT_EQ(chain.alphabet().size(), 8u);
  const auto big = validate(preset("free-matrix", {.n = 3, .lo = 0, .hi = 2}));
  EXPECT_EQ(big.alphabet().size(), 27u);
  EXPECT_EQ(big.sup_partition().min_class_size, 3u);
}

TEST(ChainPresets, GrowthBlockSizesHalveRightward) {
  for (int k = 1; k <= 5; ++k) {
    const auto chain = validate(preset("growth", {.k = k}));
    EXPECT_EQ(chain.lo(), -k);
    EXPECT_EQ(chain.hi(), 0);
    EXPECT_EQ(chain.index_count(), std::size_t{1} << k);
    for (int r = -k; r <= 0; ++r) {
      const std::size_t size = r <= -1 ? (std::size_t{1} << -r) : 2;
      for (const auto& block : chain.blocks(r, 0)) EXPECT_EQ(block.size(), size) << "k=" << k << " r=" << r;
    }
  }
}

TEST(ChainPresets, RejectsUnknownNamesAndParameters) {
  EXPECT_THROW(preset("nope"), Error);
  try {
    preset("growth", {.n = 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
  try {
    preset("nope");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPreset);
  }
  EXPECT_FALSE(preset_names().empty());
}

TEST(ChainQueries, ThetaTransposesAndVanishes) {
  const auto chain = validate(preset("needge2"));
  const auto one = *chain.find("1");
  const auto two = *chain.find("2");
  EXPECT_EQ(chain.theta(Letter{-1, two, one}), (Letter{0, one, two}));
  EXPECT_EQ(chain.theta(Letter{-1, one, two}), std::nullopt);
  EXPECT_THROW(chain.theta(Letter{1, one, one}), Error);
  EXPECT_THROW(chain.theta(Letter{0, two, one}), Error);
}

TEST(ChainQueries, LevelOutsideWindowThrows) {
  const auto chain = validate(preset("free-matrix"));
  try {
    chain.present(2, index_id(0), index_id(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LevelOutOfWindow);
  }
}

TEST(ChainProperty, PresenceMatchesListedBlocks) {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const auto spec = skewhopf::testing::random_chain_spec(rng, 2, 5, -2, 1);
    const auto chain = validate(spec);
    for (int r = spec.lo; r <= spec.hi; ++r) {
      for (const auto& i : spec.indices) {
        for (const auto& j : spec.indices) {
          EXPECT_EQ(chain.present(r, *chain.find(i), *chain.find(j)), presence_from_spec(spec, r, i, j));
        }
      }
    }
  }
}

TEST(ChainProperty, PresenceIsClosedUnderComultiplication) {
  // x_ij present whenever some x_iu and x_uj are: the span is a subcoalgebra,
  // and every present x_ij has x_ii, x_jj present.
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const auto chain = validate(skewhopf::testing::random_chain_spec(rng, 2, 5, -1, 2));
    for (int r = chain.lo(); r <= chain.hi(); ++r) {
      for (const auto& l : chain.letters(r)) {
        EXPECT_TRUE(chain.present(r, l.row, l.row));
        EXPECT_TRUE(chain.present(r, l.col, l.col));
        for (const auto& m : chain.letters(r)) {
          if (l.col == m.row) EXPECT_TRUE(chain.present(r, l.row, m.col));
        }
      }
    }
  }
}

TEST(ChainProperty, ThetaIsSurjective) {
  // Every generator at level r+1 is the image of one at level r.
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto chain = validate(skewhopf::testing::random_chain_spec(rng, 2, 5, -2, 1));
    for (int r = chain.lo(); r < chain.hi(); ++r) {
      for (const auto& l : chain.letters(r + 1)) {
        const Letter source{r, l.col, l.row};
        ASSERT_TRUE(chain.present(source));
        EXPECT_EQ(chain.theta(source), l);
      }
    }
  }
}

TEST(ChainProperty, SupremumClassesShareEveryBlock) {
  Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const auto chain = validate(skewhopf::testing::random_chain_spec(rng, 2, 6, -1, 1));
    std::size_t covered = 0;
    for (const auto& cls : chain.sup_partition().classes) {
      covered += cls.size();
      for (auto i : cls) {
        for (auto j : cls) EXPECT_TRUE(chain.same_block(chain.hi(), i, j));
      }
    }
    EXPECT_EQ(covered, chain.index_count());
    // Top-level blocks are the finest, so classes are exactly those blocks.
    std::size_t top_blocks = 0;
    for (std::size_t c = 0; c < chain.component_count(); ++c) top_blocks += chain.block_count(chain.hi(), c);
    EXPECT_EQ(chain.sup_partition().classes.size(), top_blocks);
  }
}
