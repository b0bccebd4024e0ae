#include "skewhopf/hopf.hpp"

#include <map>
#include <optional>
#include <unordered_map>

#include "skewhopf/error.hpp"
#include "skewhopf/linalg.hpp"

namespace skewhopf::hopf {

namespace {

// Normal forms of words, memoized for the duration of one computation.
class NormalFormCache {
 public:
  explicit NormalFormCache(const rewrite::RuleSet& rules) : rules_(rules) {}

  const NCPoly& operator()(const Word& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, rewrite::normal_form(rules_, w)).first;
    return it->second;
  }

 private:
  const rewrite::RuleSet& rules_;
  std::unordered_map<Word, NCPoly, WordHash> cache_;
};

// Raw coproduct of a word as (left, right) pairs before normalization.
std::vector<std::pair<Word, Word>> split_word(const ValidatedChain& chain, const Word& w) {
  std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> partial{{{}, {}}};
  for (const auto& l : w) {
    std::vector<IndexId> middles;
    for (auto u : chain.component(chain.component_of(l.row))) {
      if (chain.present(l.level, l.row, u) && chain.present(l.level, u, l.col)) middles.push_back(u);
    }
    std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> next;
    next.reserve(partial.size() * middles.size());
    for (const auto& [a, b] : partial) {
      for (auto u : middles) {
        auto left = a;
        auto right = b;
        left.push_back({l.level, l.row, u});
        right.push_back({l.level, u, l.col});
        next.emplace_back(std::move(left), std::move(right));
      }
    }
    partial = std::move(next);
  }
  std::vector<std::pair<Word, Word>> out;
  out.reserve(partial.size());
  for (auto& [a, b] : partial) out.emplace_back(Word(std::move(a)), Word(std::move(b)));
  return out;
}

void check_generators(const ValidatedChain& chain, const NCPoly& p) {
  for (const auto& [w, c] : p.terms()) {
    for (const auto& l : w) {
      if (!chain.in_window(l.level) || !chain.present(l)) {
        throw Error(ErrorCode::LetterOutOfWindow, "letter is not a generator of the chain");
      }
    }
  }
}

// Antipode of one word in the free algebra (no normalization); zero when a
// letter maps to an absent generator.
NCPoly antipode_word(const ValidatedChain& chain, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->level + 1 > chain.hi()) {
      throw Error(ErrorCode::WindowExceeded,
                  "antipode of a level-" + std::to_string(it->level) + " letter needs level " +
                      std::to_string(it->level + 1) + " beyond the window");
    }
    if (!chain.present(it->level + 1, it->col, it->row)) return {};
    out.push_back({it->level + 1, it->col, it->row});
  }
  return NCPoly(Word(std::move(out)));
}

}  // namespace

TensorPoly comultiply(const rewrite::RuleSet& rules, const NCPoly& p) {
  const auto& chain = rules.chain();
  check_generators(chain, p);
  NormalFormCache nf(rules);
  TensorPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [a, b] : split_word(chain, w)) {
      const NCPoly& na = nf(a);
      const NCPoly& nb = nf(b);
      for (const auto& [wa, ca] : na.terms()) {
        for (const auto& [wb, cb] : nb.terms()) out.add_term({wa, wb}, c * ca * cb);
      }
    }
  }
  return out;
}

Tensor3 comultiply_left_leg(const rewrite::RuleSet& rules, const TensorPoly& t) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    const auto split = comultiply(rules, NCPoly(key[0]));
    for (const auto& [ab, cc] : split.terms()) out.add_term({ab[0], ab[1], key[1]}, c * cc);
  }
  return out;
}

Tensor3 comultiply_right_leg(const rewrite::RuleSet& rules, const TensorPoly& t) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    const auto split = comultiply(rules, NCPoly(key[1]));
    for (const auto& [ab, cc] : split.terms()) out.add_term({key[0], ab[0], ab[1]}, c * cc);
  }
  return out;
}

Rational counit(const Word& w) {
  for (const auto& l : w) {
    if (l.row != l.col) return 0;
  }
  return 1;
}

Rational counit(const NCPoly& p) {
  Rational total;
  for (const auto& [w, c] : p.terms()) total += c * counit(w);
  return total;
}

NCPoly counit_left_leg(const TensorPoly& t) {
  NCPoly out;
  for (const auto& [key, c] : t.terms()) out.add_term(key[1], c * counit(key[0]));
  return out;
}

NCPoly counit_right_leg(const TensorPoly& t) {
  NCPoly out;
  for (const auto& [key, c] : t.terms()) out.add_term(key[0], c * counit(key[1]));
  return out;
}

NCPoly antipode(const rewrite::RuleSet& rules, const NCPoly& p) {
  const auto& chain = rules.chain();
  check_generators(chain, p);
  NCPoly raw;
  for (const auto& [w, c] : p.terms()) raw += antipode_word(chain, w) * c;
  return rewrite::normal_form(rules, raw);
}

NCPoly convolve_antipode_left(const rewrite::RuleSet& rules, const NCPoly& p) {
  const auto& chain = rules.chain();
  const auto delta = comultiply(rules, p);
  NCPoly raw;
  for (const auto& [key, c] : delta.terms()) raw += antipode_word(chain, key[0]) * NCPoly(key[1]) * c;
  return rewrite::normal_form(rules, raw);
}

NCPoly convolve_antipode_right(const rewrite::RuleSet& rules, const NCPoly& p) {
  const auto& chain = rules.chain();
  const auto delta = comultiply(rules, p);
  NCPoly raw;
  for (const auto& [key, c] : delta.terms()) raw += NCPoly(key[0]) * antipode_word(chain, key[1]) * c;
  return rewrite::normal_form(rules, raw);
}

std::pair<bool, bool> convolution_check(const rewrite::RuleSet& rules, int r, IndexId i, IndexId j) {
  const auto& chain = rules.chain();
  if (!chain.in_window(r) || !chain.in_window(r + 1)) {
    throw Error(ErrorCode::WindowExceeded, "convolution check at level " + std::to_string(r) +
                                               " needs levels " + std::to_string(r) + " and " +
                                               std::to_string(r + 1) + " in the window");
  }
  if (!chain.present(r, i, j)) throw Error(ErrorCode::LetterNotPresent, "generator is absent");
  const NCPoly x{Letter{r, i, j}};
  const NCPoly expected = NCPoly::constant(i == j ? 1 : 0);
  return {convolve_antipode_left(rules, x) == expected, convolve_antipode_right(rules, x) == expected};
}

RankTuple rank(const rewrite::RuleSet& rules, const NCPoly& p) {
  const NCPoly q = rewrite::normal_form(rules, p);
  if (q.is_zero()) throw Error(ErrorCode::ZeroElement, "rank of the zero element");
  const std::size_t top = q.degree();
  std::optional<RankTuple> found;
  for (const auto& [w, c] : q.terms()) {
    if (w.size() != top) continue;
    auto levels = w.levels();
    if (!found) {
      found = std::move(levels);
    } else if (*found != levels) {
      throw Error(ErrorCode::NonUniqueRank, "two distinct longest superscript tuples");
    }
  }
  return *found;
}

std::size_t right_span_dim(const rewrite::RuleSet& rules, const NCPoly& p) {
  const NCPoly q = rewrite::normal_form(rules, p);
  const auto delta = comultiply(rules, q);
  std::map<Word, std::vector<std::pair<std::uint32_t, Rational>>, WordLess> rows;
  std::unordered_map<Word, std::uint32_t, WordHash> columns;
  for (const auto& [key, c] : delta.terms()) {
    const auto col = columns.try_emplace(key[1], static_cast<std::uint32_t>(columns.size())).first->second;
    rows[key[0]].emplace_back(col, c);
  }
  RowEchelon echelon;
  for (auto& [left, entries] : rows) echelon.insert(make_sparse_row(std::move(entries)));
  return echelon.rank();
}

CoradicalSplit asymptotic_coradical(const ValidatedChain& chain) {
  CoradicalSplit split;
  for (int r = chain.lo(); r <= chain.hi(); ++r) {
    CoradicalLevel level{r, {}, {}};
    for (const auto& l : chain.letters(r)) {
      if (chain.same_block(chain.lo(), l.row, l.col)) {
        level.diagonal.push_back(l);
      } else {
        level.off_diagonal.push_back(l);
      }
    }
    split.levels.push_back(std::move(level));
  }
  return split;
}

}  // namespace skewhopf::hopf
