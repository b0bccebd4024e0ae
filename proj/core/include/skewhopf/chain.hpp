#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skewhopf/word.hpp"

namespace skewhopf {

/// Block partition listed for one level. Blocks are listed component by
/// component; each must be an interval of its component's order.
struct LevelBlocks {
  int r = 0;
  std::vector<std::vector<std::string>> blocks;

  friend bool operator==(const LevelBlocks&, const LevelBlocks&) = default;
};

/// User-facing description of a triangular skew coalgebra chain truncated to
/// the window [lo, hi]. Levels that are not listed inherit the blocks of the
/// nearest listed level at or below them; with no such level, every
/// component is a single block.
struct ChainSpec {
  std::vector<std::string> indices;
  std::vector<std::vector<std::string>> components;
  int lo = 0;
  int hi = 0;
  std::vector<LevelBlocks> levels;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

enum class WarningCode {
  SupClassTooSmall,
  PositiveLowLevel,
};

std::string_view warning_code_name(WarningCode code);

struct Warning {
  WarningCode code;
  std::string message;
};

struct Partition {
  std::vector<std::vector<IndexId>> classes;
  std::size_t min_class_size = 0;
};

class ValidatedChain;

/// Checks the spec and derives presence tables. Throws Error with
/// NonRefining, NonIntervalBlock, DuplicateIndex, EmptyWindow, UnknownIndex
/// or BadPartition. Undersized supremum classes only produce a warning.
ValidatedChain validate(const ChainSpec& spec);

/// Immutable validated chain with derived presence tables.
class ValidatedChain {
 public:
  const ChainSpec& spec() const { return spec_; }
  int lo() const { return spec_.lo; }
  int hi() const { return spec_.hi; }
  bool in_window(int r) const { return r >= spec_.lo && r <= spec_.hi; }

  std::size_t index_count() const { return names_.size(); }
  const std::string& name(IndexId id) const { return names_.at(ordinal(id)); }
  std::optional<IndexId> find(std::string_view name) const;

  std::size_t component_count() const { return components_.size(); }
  std::size_t component_of(IndexId id) const { return component_of_.at(ordinal(id)); }
  std::span<const IndexId> component(std::size_t c) const { return components_.at(c); }

  /// Block number of `id` within its component at level r (0 = first block).
  std::size_t block_of(int r, IndexId id) const;
  std::size_t block_count(int r, std::size_t component) const;
  /// Members of each block of `component` at level r, in order.
  std::vector<std::vector<IndexId>> blocks(int r, std::size_t component) const;
  bool same_block(int r, IndexId i, IndexId j) const;

  /// Whether x^r_{ij} is a generator: upper block pattern for even r, lower
  /// for odd r, never across components. Throws LevelOutOfWindow.
  bool present(int r, IndexId i, IndexId j) const;
  bool present(const Letter& l) const { return present(l.level, l.row, l.col); }

  /// theta: x^r_{ij} -> x^{r+1}_{ji}, or nullopt when that letter is absent.
  /// Throws LevelOutOfWindow when r+1 > hi, LetterNotPresent for absent input.
  std::optional<Letter> theta(const Letter& l) const;

  /// Present letters at level r, in letter_less order.
  std::vector<Letter> letters(int r) const;
  /// Present letters at every level of the window, in letter_less order.
  std::vector<Letter> alphabet() const;

  const Partition& sup_partition() const { return sup_; }
  /// All supremum classes have at least two elements.
  bool sup_ok() const { return sup_.min_class_size >= 2; }
  std::span<const Warning> warnings() const { return warnings_; }

 private:
  friend ValidatedChain validate(const ChainSpec& spec);
  ValidatedChain() = default;

  void check_level(int r) const;

  ChainSpec spec_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, IndexId> ids_;
  std::vector<std::vector<IndexId>> components_;
  std::vector<std::size_t> component_of_;
  // block_[r - lo][ordinal]
  std::vector<std::vector<std::size_t>> block_;
  // block_counts_[r - lo][component]
  std::vector<std::vector<std::size_t>> block_counts_;
  Partition sup_;
  std::vector<Warning> warnings_;
};

/// Optional integer parameters of the named chain presets.
struct PresetParams {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> lo;
  std::optional<int> hi;
};

/// Named chains:
///   free-matrix(n=2, lo=0, hi=1)  one block of n at every level;
///   collapse-m4(lo=-1, hi=1)      1..4, one block below 0, {1,2},{3,4} from 0;
///   needge2(n=2, lo=-1, hi=1)     full block below 0, {1},{2..n} from 0;
///   growth(k=3)                   2^k indices on [-k, 0], blocks of size
///                                 2^{-r} for r <= -1 and 2 at r = 0.
/// Throws UnknownPreset or BadParams.
ChainSpec preset(std::string_view name, const PresetParams& params = {});
std::span<const std::string_view> preset_names();

}  // namespace skewhopf
