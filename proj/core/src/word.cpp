#include "skewhopf/word.hpp"

#include <algorithm>
#include <tuple>

namespace skewhopf {

namespace {

// Sort key realizing letter_less. Odd levels reverse both subscripts.
std::tuple<int, std::int64_t, std::int64_t> letter_key(const Letter& l) {
  const auto row = static_cast<std::int64_t>(ordinal(l.row));
  const auto col = static_cast<std::int64_t>(ordinal(l.col));
  if (l.level % 2 == 0) return {l.level, col, row};
  return {l.level, -col, -row};
}

}  // namespace

bool letter_less(const Letter& a, const Letter& b) { return letter_key(a) < letter_key(b); }

std::size_t LetterHash::operator()(const Letter& l) const noexcept {
  std::uint64_t h = static_cast<std::uint32_t>(l.level);
  h = h * 0x9E3779B97F4A7C15ULL ^ ordinal(l.row);
  h = h * 0x9E3779B97F4A7C15ULL ^ ordinal(l.col);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::vector<int> Word::levels() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.level);
  return out;
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
  if (pos + pattern.size() > size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool Word::contains(const Word& pattern) const {
  if (pattern.size() > size()) return false;
  for (std::size_t pos = 0; pos + pattern.size() <= size(); ++pos) {
    if (matches_at(pattern, pos)) return true;
  }
  return false;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  LetterHash lh;
  for (const auto& l : w) h = h * 1000003u ^ lh(l);
  return h;
}

}  // namespace skewhopf
