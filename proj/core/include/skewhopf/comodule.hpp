#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewhopf/chain.hpp"

namespace skewhopf::comodule {

/// Natural comodule of one component at one level:
/// rho(e_j) = sum_i e_i (x) coaction[i][j], entries absent where the
/// generator is.
struct ComoduleStructure {
  int level = 0;
  std::size_t component = 0;
  std::vector<IndexId> basis;
  std::vector<std::vector<std::optional<Letter>>> coaction;

  friend bool operator==(const ComoduleStructure&, const ComoduleStructure&) = default;
};

/// Sorted block numbers (at the structure's level) spanning a coordinate
/// subspace.
using BlockSet = std::vector<std::size_t>;

/// Coordinate subspaces of a comodule, each a sorted BlockSet; elements are
/// sorted by size, then lexicographically.
struct SubspaceLattice {
  int level = 0;
  std::size_t component = 0;
  std::vector<BlockSet> elements;

  bool contains(const BlockSet& s) const;
  friend bool operator==(const SubspaceLattice&, const SubspaceLattice&) = default;
};

ComoduleStructure natural_comodule(const ValidatedChain& chain, int r, std::size_t component);

/// Dual on the dual basis: entry (i,j) is S(x^r_{ji}) = x^{r+1}_{ij} when
/// both generators exist. Throws WindowExceeded at the top level.
ComoduleStructure dual_comodule(const ValidatedChain& chain, const ComoduleStructure& s);

/// Subcomodules, computed by closing coordinate vectors under the action of
/// the dual algebra: e_j generates every e_i with a coaction entry (i,j).
/// Each component's blocks are pairwise non-isomorphic simples, so every
/// subcomodule is a coordinate block subspace and the result is the whole
/// lattice.
SubspaceLattice submodule_lattice(const ValidatedChain& chain, const ComoduleStructure& s);

/// Down-sets of the level-r block order: initial segments of the blocks for
/// even r (upper pattern), final segments for odd r (lower pattern).
SubspaceLattice expected_lattice(const ValidatedChain& chain, int r, std::size_t component);

/// Annihilators of the lattice elements, re-expressed in the blocks of level
/// r+1 (where the dual comodule lives).
SubspaceLattice annihilator_image(const ValidatedChain& chain, const SubspaceLattice& lattice);

/// Generators spanning the coefficient coalgebra of the subquotient
/// sub / quotient_of. Throws NotASubcomodule unless both are lattice
/// elements with quotient_of inside sub.
std::vector<Letter> coefficient_coalgebra(const ValidatedChain& chain, const ComoduleStructure& s,
                                          const BlockSet& sub, const std::optional<BlockSet>& quotient_of = {});

/// Smallest block size at level r, i.e. the least dimension of a simple
/// comodule of that level.
std::size_t min_simple_dim(const ValidatedChain& chain, int r);

enum class GrowthVerdict {
  Bounded,             // constant at the left edge of the window
  BoundedWindow,       // a single increase at the left edge: no trend yet
  IncreasingLeftward,  // at least two consecutive increases towards lo
  DoublingLeftward,    // as above, each step exactly doubling
};

std::string_view verdict_name(GrowthVerdict v);

struct GrowthRow {
  int r = 0;
  std::size_t min_simple_dim = 0;
  bool sup_ok = false;  // every level-r block has at least two elements
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  GrowthVerdict verdict = GrowthVerdict::Bounded;
  /// Level from which min_simple_dim increases strictly towards lo.
  int trend_start = 0;
  std::string note;
};

GrowthReport growth_report(const ValidatedChain& chain);

}  // namespace skewhopf::comodule
