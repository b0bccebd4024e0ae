#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace skewhopf {

/// Position of an index id in its chain's global order. Components occupy
/// consecutive ranges, so comparing ordinals of two ids in one component
/// compares them in that component's total order.
enum class IndexId : std::uint32_t {};

constexpr std::uint32_t ordinal(IndexId id) { return static_cast<std::uint32_t>(id); }
constexpr IndexId index_id(std::uint32_t ordinal) { return static_cast<IndexId>(ordinal); }

/// Generator x^level_{row,col}.
struct Letter {
  int level = 0;
  IndexId row{};
  IndexId col{};

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// The rewriting order on letters: by level; within an even level increasing
/// in both column and row, within an odd level decreasing in both. Every
/// chain-derived rule rewrites its left-hand side into strictly smaller words
/// under the induced degree-lexicographic order.
bool letter_less(const Letter& a, const Letter& b);

struct LetterHash {
  std::size_t operator()(const Letter& l) const noexcept;
};

/// A word in the free monoid on the letters. The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(const Letter& l) : letters_{l} {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  /// Superscript tuple of the word.
  std::vector<int> levels() const;
  /// True iff `pattern` occurs contiguously starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const;
  bool contains(const Word& pattern) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Degree-lexicographic order: shorter words first, then lexicographic in
/// letter_less.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return WordLess{}(b, a); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace skewhopf
