#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skewhopf/chain.hpp"
#include "skewhopf/ncpoly.hpp"
#include "skewhopf/rewrite.hpp"

namespace skewhopf::hopf {

/// Delta x^r_{ij} = sum_u x^r_{iu} (x) x^r_{uj}, extended multiplicatively and
/// linearly; both legs are brought to normal form.
TensorPoly comultiply(const rewrite::RuleSet& rules, const NCPoly& p);

/// (Delta (x) id) and (id (x) Delta) applied to a tensor with normalized legs.
Tensor3 comultiply_left_leg(const rewrite::RuleSet& rules, const TensorPoly& t);
Tensor3 comultiply_right_leg(const rewrite::RuleSet& rules, const TensorPoly& t);

/// epsilon(x^r_{ij}) = delta_ij, multiplicative and linear.
Rational counit(const NCPoly& p);
Rational counit(const Word& w);

/// (epsilon (x) id) and (id (x) epsilon).
NCPoly counit_left_leg(const TensorPoly& t);
NCPoly counit_right_leg(const TensorPoly& t);

/// S x^r_{ij} = x^{r+1}_{ji} (or 0 when absent), anti-multiplicative, result
/// normalized. Throws WindowExceeded for letters at the top level.
NCPoly antipode(const rewrite::RuleSet& rules, const NCPoly& p);

/// m (S (x) id) Delta p and m (id (x) S) Delta p, normalized.
NCPoly convolve_antipode_left(const rewrite::RuleSet& rules, const NCPoly& p);
NCPoly convolve_antipode_right(const rewrite::RuleSet& rules, const NCPoly& p);

/// Whether both convolution identities give delta_ij * 1 for x^r_{ij}.
/// Throws WindowExceeded unless r, r+1 lie in the window and
/// LetterNotPresent for absent generators.
std::pair<bool, bool> convolution_check(const rewrite::RuleSet& rules, int r, IndexId i, IndexId j);

using RankTuple = std::vector<int>;

/// Superscript tuple of the unique longest support word of the normal form.
/// Throws ZeroElement or NonUniqueRank.
RankTuple rank(const rewrite::RuleSet& rules, const NCPoly& p);

/// dim span{(f (x) id) Delta p}: rank of the matrix whose rows are the left
/// legs of Delta p and whose entries are right-leg coefficients.
std::size_t right_span_dim(const rewrite::RuleSet& rules, const NCPoly& p);

struct CoradicalLevel {
  int r = 0;
  std::vector<Letter> diagonal;
  std::vector<Letter> off_diagonal;
};

/// Per level, the present letters split into the asymptotic coradical (both
/// subscripts in one block at the lowest window level) and its complement.
struct CoradicalSplit {
  std::vector<CoradicalLevel> levels;
};

CoradicalSplit asymptotic_coradical(const ValidatedChain& chain);

}  // namespace skewhopf::hopf
