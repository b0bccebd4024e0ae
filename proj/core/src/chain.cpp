#include "skewhopf/chain.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "skewhopf/error.hpp"

namespace skewhopf {

std::string_view warning_code_name(WarningCode code) {
  switch (code) {
    case WarningCode::SupClassTooSmall: return "SUP_CLASS_TOO_SMALL";
    case WarningCode::PositiveLowLevel: return "POSITIVE_LOW_LEVEL";
  }
  return "UNKNOWN";
}

namespace {

using BlockTable = std::vector<std::size_t>;  // ordinal -> block number within component

// Resolves one listed level's blocks into block numbers per ordinal.
BlockTable resolve_blocks(const LevelBlocks& level,
                          const std::unordered_map<std::string, IndexId>& ids,
                          const std::vector<std::size_t>& component_of,
                          const std::vector<std::vector<IndexId>>& components) {
  const std::size_t n = component_of.size();
  const std::string where = "level " + std::to_string(level.r);
  std::vector<bool> seen(n, false);
  // (component, first ordinal, last ordinal) per block
  std::vector<std::array<std::uint32_t, 3>> spans;
  for (const auto& block : level.blocks) {
    if (block.empty()) throw Error(ErrorCode::BadPartition, where + ": empty block");
    std::vector<std::uint32_t> members;
    for (const auto& name : block) {
      auto it = ids.find(name);
      if (it == ids.end()) throw Error(ErrorCode::UnknownIndex, where + ": unknown index '" + name + "'");
      const auto o = ordinal(it->second);
      if (seen[o]) throw Error(ErrorCode::DuplicateIndex, where + ": index '" + name + "' in two blocks");
      seen[o] = true;
      members.push_back(o);
    }
    std::sort(members.begin(), members.end());
    const auto comp = component_of[members.front()];
    for (auto o : members) {
      if (component_of[o] != comp) {
        throw Error(ErrorCode::NonIntervalBlock, where + ": block spans several components");
      }
    }
    if (members.back() - members.front() + 1 != members.size()) {
      throw Error(ErrorCode::NonIntervalBlock, where + ": block is not an interval of its component order");
    }
    spans.push_back({static_cast<std::uint32_t>(comp), members.front(), members.back()});
  }
  for (std::size_t o = 0; o < n; ++o) {
    if (!seen[o]) throw Error(ErrorCode::BadPartition, where + ": blocks do not cover every index");
  }
  std::sort(spans.begin(), spans.end());
  BlockTable table(n, 0);
  std::size_t current_comp = components.size();
  std::size_t number = 0;
  for (const auto& [comp, first, last] : spans) {
    if (comp != current_comp) {
      current_comp = comp;
      number = 0;
    }
    for (auto o = first; o <= last; ++o) table[o] = number;
    ++number;
  }
  return table;
}

}  // namespace

ValidatedChain validate(const ChainSpec& spec) {
  if (spec.lo > spec.hi) {
    throw Error(ErrorCode::EmptyWindow, "window lo=" + std::to_string(spec.lo) + " exceeds hi=" + std::to_string(spec.hi));
  }
  if (spec.indices.empty()) throw Error(ErrorCode::BadPartition, "no indices");

  ValidatedChain chain;
  chain.spec_ = spec;

  std::unordered_map<std::string, bool> declared;
  for (const auto& name : spec.indices) {
    if (!declared.emplace(name, false).second) {
      throw Error(ErrorCode::DuplicateIndex, "index '" + name + "' declared twice");
    }
  }
  if (spec.components.empty()) throw Error(ErrorCode::BadPartition, "no components");

  // Ordinals follow component order so that intervals are ordinal ranges.
  for (const auto& comp : spec.components) {
    if (comp.empty()) throw Error(ErrorCode::BadPartition, "empty component");
    std::vector<IndexId> members;
    for (const auto& name : comp) {
      auto it = declared.find(name);
      if (it == declared.end()) throw Error(ErrorCode::UnknownIndex, "component lists unknown index '" + name + "'");
      if (it->second) throw Error(ErrorCode::DuplicateIndex, "index '" + name + "' in two components");
      it->second = true;
      const IndexId id = index_id(static_cast<std::uint32_t>(chain.names_.size()));
      chain.names_.push_back(name);
      chain.ids_.emplace(name, id);
      chain.component_of_.push_back(chain.components_.size());
      members.push_back(id);
    }
    chain.components_.push_back(std::move(members));
  }
  for (const auto& [name, used] : declared) {
    if (!used) throw Error(ErrorCode::BadPartition, "index '" + name + "' belongs to no component");
  }

  std::map<int, BlockTable> listed;
  for (const auto& level : spec.levels) {
    auto table = resolve_blocks(level, chain.ids_, chain.component_of_, chain.components_);
    if (!listed.emplace(level.r, std::move(table)).second) {
      throw Error(ErrorCode::BadPartition, "level " + std::to_string(level.r) + " listed twice");
    }
  }

  const std::size_t n = chain.names_.size();
  for (int r = spec.lo; r <= spec.hi; ++r) {
    auto it = listed.upper_bound(r);
    BlockTable table = it == listed.begin() ? BlockTable(n, 0) : std::prev(it)->second;
    std::vector<std::size_t> counts(chain.components_.size(), 0);
    for (std::size_t o = 0; o < n; ++o) {
      auto& c = counts[chain.component_of_[o]];
      c = std::max(c, table[o] + 1);
    }
    chain.block_.push_back(std::move(table));
    chain.block_counts_.push_back(std::move(counts));
  }

  // Blocks at r+1 must sit inside blocks at r. Blocks are intervals, so it
  // suffices to compare neighbours.
  for (int r = spec.lo; r < spec.hi; ++r) {
    const auto& coarse = chain.block_[static_cast<std::size_t>(r - spec.lo)];
    const auto& fine = chain.block_[static_cast<std::size_t>(r + 1 - spec.lo)];
    for (std::size_t o = 0; o + 1 < n; ++o) {
      if (chain.component_of_[o] != chain.component_of_[o + 1]) continue;
      if (fine[o] == fine[o + 1] && coarse[o] != coarse[o + 1]) {
        throw Error(ErrorCode::NonRefining, "blocks at level " + std::to_string(r + 1) +
                                                " merge indices '" + chain.names_[o] + "' and '" +
                                                chain.names_[o + 1] + "' separated at level " + std::to_string(r));
      }
    }
  }

  // Supremum partition: indices related at every level of the window.
  std::map<std::vector<std::size_t>, std::vector<IndexId>> classes;
  for (std::size_t o = 0; o < n; ++o) {
    std::vector<std::size_t> key{chain.component_of_[o]};
    for (const auto& table : chain.block_) key.push_back(table[o]);
    classes[key].push_back(index_id(static_cast<std::uint32_t>(o)));
  }
  chain.sup_.min_class_size = n;
  for (auto& [key, members] : classes) {
    chain.sup_.min_class_size = std::min(chain.sup_.min_class_size, members.size());
    chain.sup_.classes.push_back(std::move(members));
  }
  std::sort(chain.sup_.classes.begin(), chain.sup_.classes.end());

  if (!chain.sup_ok()) {
    chain.warnings_.push_back({WarningCode::SupClassTooSmall,
                               "supremum partition has a class of size " + std::to_string(chain.sup_.min_class_size)});
  }
  if (spec.lo > 0) {
    chain.warnings_.push_back({WarningCode::PositiveLowLevel, "lowest level " + std::to_string(spec.lo) + " is positive"});
  }
  return chain;
}

std::optional<IndexId> ValidatedChain::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void ValidatedChain::check_level(int r) const {
  if (!in_window(r)) {
    throw Error(ErrorCode::LevelOutOfWindow, "level " + std::to_string(r) + " outside window [" +
                                                 std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
  }
}

std::size_t ValidatedChain::block_of(int r, IndexId id) const {
  check_level(r);
  return block_[static_cast<std::size_t>(r - lo())].at(ordinal(id));
}

std::size_t ValidatedChain::block_count(int r, std::size_t component) const {
  check_level(r);
  return block_counts_[static_cast<std::size_t>(r - lo())].at(component);
}

std::vector<std::vector<IndexId>> ValidatedChain::blocks(int r, std::size_t component) const {
  std::vector<std::vector<IndexId>> out(block_count(r, component));
  for (auto id : this->component(component)) out[block_of(r, id)].push_back(id);
  return out;
}

bool ValidatedChain::same_block(int r, IndexId i, IndexId j) const {
  return component_of(i) == component_of(j) && block_of(r, i) == block_of(r, j);
}

bool ValidatedChain::present(int r, IndexId i, IndexId j) const {
  check_level(r);
  if (ordinal(i) >= names_.size() || ordinal(j) >= names_.size()) return false;
  if (component_of_[ordinal(i)] != component_of_[ordinal(j)]) return false;
  const auto& table = block_[static_cast<std::size_t>(r - lo())];
  const auto bi = table[ordinal(i)];
  const auto bj = table[ordinal(j)];
  return r % 2 == 0 ? bi <= bj : bi >= bj;
}

std::optional<Letter> ValidatedChain::theta(const Letter& l) const {
  check_level(l.level);
  check_level(l.level + 1);
  if (!present(l)) throw Error(ErrorCode::LetterNotPresent, "theta of an absent letter");
  if (!present(l.level + 1, l.col, l.row)) return std::nullopt;
  return Letter{l.level + 1, l.col, l.row};
}

std::vector<Letter> ValidatedChain::letters(int r) const {
  check_level(r);
  std::vector<Letter> out;
  for (const auto& comp : components_) {
    for (auto i : comp) {
      for (auto j : comp) {
        if (present(r, i, j)) out.push_back({r, i, j});
      }
    }
  }
  std::sort(out.begin(), out.end(), letter_less);
  return out;
}

std::vector<Letter> ValidatedChain::alphabet() const {
  std::vector<Letter> out;
  for (int r = lo(); r <= hi(); ++r) {
    auto level = letters(r);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 4> kPresetNames{"free-matrix", "collapse-m4", "needge2", "growth"};

std::vector<std::string> numbered(int count) {
  std::vector<std::string> out;
  for (int k = 1; k <= count; ++k) out.push_back(std::to_string(k));
  return out;
}

std::vector<std::string> slice(const std::vector<std::string>& v, std::size_t first, std::size_t last) {
  return {v.begin() + static_cast<std::ptrdiff_t>(first), v.begin() + static_cast<std::ptrdiff_t>(last)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

std::span<const std::string_view> preset_names() { return kPresetNames; }

ChainSpec preset(std::string_view name, const PresetParams& params) {
  ChainSpec spec;
  if (name == "free-matrix") {
    const int n = params.n.value_or(2);
    require(n >= 1 && n <= 64, "free-matrix needs 1 <= n <= 64");
    require(!params.k, "free-matrix takes no k");
    spec.indices = numbered(n);
    spec.components = {spec.indices};
    spec.lo = params.lo.value_or(0);
    spec.hi = params.hi.value_or(1);
    spec.levels = {{spec.lo, {spec.indices}}};
  } else if (name == "collapse-m4") {
    require(!params.n && !params.k, "collapse-m4 takes only lo and hi");
    spec.indices = numbered(4);
    spec.components = {spec.indices};
    spec.lo = params.lo.value_or(-1);
    spec.hi = params.hi.value_or(1);
    if (spec.lo < 0) spec.levels.push_back({spec.lo, {spec.indices}});
    spec.levels.push_back({std::max(spec.lo, 0), {slice(spec.indices, 0, 2), slice(spec.indices, 2, 4)}});
  } else if (name == "needge2") {
    const int n = params.n.value_or(2);
    require(n >= 2 && n <= 64, "needge2 needs 2 <= n <= 64");
    require(!params.k, "needge2 takes no k");
    spec.indices = numbered(n);
    spec.components = {spec.indices};
    spec.lo = params.lo.value_or(-1);
    spec.hi = params.hi.value_or(1);
    if (spec.lo < 0) spec.levels.push_back({spec.lo, {spec.indices}});
    spec.levels.push_back({std::max(spec.lo, 0), {slice(spec.indices, 0, 1), slice(spec.indices, 1, spec.indices.size())}});
  } else if (name == "growth") {
    const int k = params.k.value_or(3);
    require(k >= 1 && k <= 10, "growth needs 1 <= k <= 10");
    require(!params.n && !params.lo && !params.hi, "growth takes only k (window is [-k, 0])");
    const std::size_t size = std::size_t{1} << k;
    spec.indices = numbered(static_cast<int>(size));
    spec.components = {spec.indices};
    spec.lo = -k;
    spec.hi = 0;
    for (int r = -k; r <= 0; ++r) {
      const std::size_t width = r <= -1 ? (std::size_t{1} << -r) : 2;
      LevelBlocks level{r, {}};
      for (std::size_t start = 0; start < size; start += width) {
        level.blocks.push_back(slice(spec.indices, start, start + width));
      }
      spec.levels.push_back(std::move(level));
    }
  } else {
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
  }
  require(spec.lo <= spec.hi, "lo must not exceed hi");
  return spec;
}

}  // namespace skewhopf
