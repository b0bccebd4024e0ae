#include "skewhopf/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "skewhopf/error.hpp"
#include "skewhopf/linalg.hpp"

namespace skewhopf::rewrite {

std::string_view family_name(RuleFamily family) {
  switch (family) {
    case RuleFamily::ZeroUp: return "0up";
    case RuleFamily::OneUp: return "1up";
    case RuleFamily::OneDown: return "1down";
    case RuleFamily::ZeroDown: return "0down";
    case RuleFamily::Completion: return "completion";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RuleSet

RuleSet::RuleSet(std::shared_ptr<const ValidatedChain> chain) : chain_(std::move(chain)) {}

RuleSet::RuleSet(const RuleSet& other) : chain_(other.chain_), rules_(other.rules_), lengths_(other.lengths_) {
  rebuild_lookup();
}

RuleSet& RuleSet::operator=(const RuleSet& other) {
  if (this != &other) {
    chain_ = other.chain_;
    rules_ = other.rules_;
    lengths_ = other.lengths_;
    rebuild_lookup();
  }
  return *this;
}

void RuleSet::rebuild_lookup() {
  lookup_.clear();
  for (const auto& [lhs, rule] : rules_) lookup_.emplace(lhs, &rule);
}

const Rule* RuleSet::find(const Word& lhs) const {
  auto it = lookup_.find(lhs);
  return it == lookup_.end() ? nullptr : it->second;
}

std::optional<Redex> RuleSet::find_redex(const Word& w) const {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    for (const auto& [len, count] : lengths_) {
      if (len > end) break;
      const std::size_t start = end - len;
      if (const Rule* rule = find(w.subword(start, len))) return Redex{start, rule};
    }
  }
  return std::nullopt;
}

void RuleSet::insert(Rule rule) {
  if (rule.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
  WordLess less;
  for (const auto& [w, c] : rule.rhs.terms()) {
    if (!less(w, rule.lhs)) throw std::invalid_argument("rule is not decreasing in the word order");
  }
  if (rules_.count(rule.lhs) != 0) throw std::invalid_argument("duplicate left-hand side");
  const std::size_t len = rule.lhs.size();
  Word key = rule.lhs;
  auto [it, inserted] = rules_.emplace(std::move(key), std::move(rule));
  lookup_.emplace(it->first, &it->second);
  ++lengths_[len];
}

bool RuleSet::erase(const Word& lhs) {
  auto it = rules_.find(lhs);
  if (it == rules_.end()) return false;
  lookup_.erase(lhs);
  if (--lengths_[lhs.size()] == 0) lengths_.erase(lhs.size());
  rules_.erase(it);
  return true;
}

// ---------------------------------------------------------------------------
// Rule derivation

namespace {

Rule make_rule(const std::vector<IndexId>& extremal_set, bool take_max, bool diagonal,
               const std::function<Word(IndexId)>& word_for, RuleFamily family, RuleOrigin origin) {
  const IndexId ext = take_max ? extremal_set.back() : extremal_set.front();
  Rule rule;
  rule.lhs = word_for(ext);
  rule.family = family;
  rule.origin = origin;
  if (diagonal) rule.rhs.add_term(Word{}, 1);
  for (auto a : extremal_set) {
    if (a != ext) rule.rhs.add_term(word_for(a), -1);
  }
  return rule;
}

}  // namespace

RuleSet derive_rules(const ValidatedChain& chain) {
  RuleSet rules(std::make_shared<const ValidatedChain>(chain));
  for (int r = chain.lo(); r < chain.hi(); ++r) {
    const bool even = r % 2 == 0;
    for (std::size_t c = 0; c < chain.component_count(); ++c) {
      const auto comp = chain.component(c);
      for (auto i : comp) {
        for (auto j : comp) {
          const RuleOrigin origin{r, i, j};
          // Row identity: sum_a x^r_{ia} x^{r+1}_{ja} = delta_ij.
          std::vector<IndexId> row_set;
          for (auto a : comp) {
            if (chain.present(r, i, a) && chain.present(r + 1, j, a)) row_set.push_back(a);
          }
          // Column identity: sum_b x^{r+1}_{bi} x^r_{bj} = delta_ij.
          std::vector<IndexId> col_set;
          for (auto b : comp) {
            if (chain.present(r + 1, b, i) && chain.present(r, b, j)) col_set.push_back(b);
          }
          if ((row_set.empty() || col_set.empty()) && i == j) {
            throw Error(ErrorCode::InconsistentChain,
                        "antipode identity at level " + std::to_string(r) + " for index '" + chain.name(i) +
                            "' reads 1 = 0");
          }
          if (!row_set.empty()) {
            rules.insert(make_rule(
                row_set, even, i == j,
                [&](IndexId a) { return Word{Letter{r, i, a}, Letter{r + 1, j, a}}; },
                even ? RuleFamily::ZeroUp : RuleFamily::OneUp, origin));
          }
          if (!col_set.empty()) {
            rules.insert(make_rule(
                col_set, !even, i == j,
                [&](IndexId b) { return Word{Letter{r + 1, b, i}, Letter{r, b, j}}; },
                even ? RuleFamily::ZeroDown : RuleFamily::OneDown, origin));
          }
        }
      }
    }
  }
  return rules;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

void check_letters(const ValidatedChain& chain, const Word& w) {
  for (const auto& l : w) {
    if (!chain.in_window(l.level) || !chain.present(l)) {
      throw Error(ErrorCode::LetterOutOfWindow, "x[" + std::to_string(l.level) + "," +
                                                    (ordinal(l.row) < chain.index_count() ? chain.name(l.row) : "?") +
                                                    "," +
                                                    (ordinal(l.col) < chain.index_count() ? chain.name(l.col) : "?") +
                                                    "] is not a generator of the chain");
    }
  }
}

}  // namespace

NCPoly normal_form(const RuleSet& rules, const NCPoly& p) {
  for (const auto& [w, c] : p.terms()) check_letters(rules.chain(), w);

  // Largest word first: every rewrite produces strictly smaller words, so a
  // word is final once popped.
  std::map<Word, Rational, WordGreater> pending(p.terms().begin(), p.terms().end());
  NCPoly out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();
    auto redex = rules.find_redex(w);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    const Word prefix = w.subword(0, redex->position);
    const std::size_t after = redex->position + redex->rule->lhs.size();
    const Word suffix = w.subword(after, w.size() - after);
    for (const auto& [rw, rc] : redex->rule->rhs.terms()) {
      const Rational delta = c * rc;
      auto [it, inserted] = pending.try_emplace(prefix * rw * suffix, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return out;
}

NCPoly normal_form(const RuleSet& rules, const Word& w) { return normal_form(rules, NCPoly(w)); }

// ---------------------------------------------------------------------------
// Ambiguities and confluence

std::vector<Ambiguity> ambiguities(const RuleSet& rules) {
  std::unordered_map<Letter, std::vector<const Rule*>, LetterHash> by_first;
  for (const auto& [lhs, rule] : rules.rules()) by_first[lhs[0]].push_back(&rule);

  std::vector<Ambiguity> out;
  for (const auto& [a, left] : rules.rules()) {
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
      auto it = by_first.find(a[pos]);
      if (it == by_first.end()) continue;
      for (const Rule* right : it->second) {
        const Word& b = right->lhs;
        if (pos == 0 && b.size() >= a.size()) continue;  // the rule itself, or a is inside b
        const std::size_t tail = a.size() - pos;
        if (b.size() > tail) {
          // Overlap: a's suffix from pos is a proper prefix of b.
          if (!b.matches_at(a.subword(pos, tail), 0)) continue;
          out.push_back({a * b.subword(tail, b.size() - tail), a, b, pos, false});
        } else if (a.matches_at(b, pos)) {
          out.push_back({a, a, b, pos, true});
        }
      }
    }
  }
  return out;
}

NCPoly residual(const RuleSet& rules, const Ambiguity& amb) {
  const Rule* left = rules.find(amb.left_lhs);
  const Rule* right = rules.find(amb.right_lhs);
  if (left == nullptr || right == nullptr) throw std::invalid_argument("ambiguity refers to unknown rules");
  const Word& w = amb.word;
  const std::size_t left_end = left->lhs.size();
  const std::size_t right_end = amb.right_offset + right->lhs.size();
  const NCPoly via_left = left->rhs * NCPoly(w.subword(left_end, w.size() - left_end));
  const NCPoly via_right =
      NCPoly(w.subword(0, amb.right_offset)) * right->rhs * NCPoly(w.subword(right_end, w.size() - right_end));
  return normal_form(rules, via_left) - normal_form(rules, via_right);
}

ConfluenceReport check_confluence(const RuleSet& rules, unsigned threads) {
  const auto all = ambiguities(rules);
  std::vector<NCPoly> residuals(all.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, all.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < all.size(); ++k) residuals[k] = residual(rules, all[k]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < all.size(); k += workers) residuals[k] = residual(rules, all[k]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ConfluenceReport report;
  report.ambiguity_count = all.size();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (residuals[k].is_zero()) {
      ++report.resolved;
    } else {
      report.unresolved.push_back({all[k], std::move(residuals[k])});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Completion

CompletionResult complete(const RuleSet& input, std::size_t max_degree, std::size_t max_iterations) {
  if (max_degree < 2) throw Error(ErrorCode::BadParams, "completion needs max degree >= 2");
  CompletionResult result{input, {}, false, false, false, false, 0};
  RuleSet& rules = result.rules;

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    const auto report = check_confluence(rules);
    std::deque<std::pair<NCPoly, bool>> queue;  // (relation, from a residual)
    for (const auto& u : report.unresolved) {
      if (u.residual.degree() > max_degree) {
        result.degree_cap_hit = true;
        continue;
      }
      queue.emplace_back(u.residual, true);
    }
    if (queue.empty()) {
      result.fixpoint = true;
      return result;
    }
    ++result.iterations;

    bool added = false;
    while (!queue.empty()) {
      auto [relation, fresh] = std::move(queue.front());
      queue.pop_front();
      NCPoly q = normal_form(rules, relation);
      if (q.is_zero()) continue;
      if (q.degree() > max_degree) {
        result.degree_cap_hit = true;
        continue;
      }
      q *= Rational(1) / q.leading_coefficient();
      const Word lead = q.leading_word();
      if (fresh) result.derived.push_back(q);
      if (lead.empty()) {
        result.collapsed = true;
        return result;
      }
      std::vector<Word> victims;
      for (const auto& [lhs, rule] : rules.rules()) {
        if (lhs.contains(lead)) victims.push_back(lhs);
      }
      for (const auto& lhs : victims) {
        queue.emplace_back(NCPoly(lhs) - rules.find(lhs)->rhs, false);
        rules.erase(lhs);
      }
      NCPoly rhs = NCPoly(lead) - q;
      rules.insert(Rule{lead, std::move(rhs), RuleFamily::Completion, std::nullopt});
      added = true;
    }

    // Keep right-hand sides reduced.
    std::vector<Rule> snapshot;
    for (const auto& [lhs, rule] : rules.rules()) snapshot.push_back(rule);
    for (auto& rule : snapshot) {
      NCPoly reduced = normal_form(rules, rule.rhs);
      if (reduced != rule.rhs) {
        rules.erase(rule.lhs);
        rule.rhs = std::move(reduced);
        rules.insert(std::move(rule));
      }
    }
    if (!added) {
      result.fixpoint = true;
      return result;
    }
  }
  result.fixpoint = check_confluence(rules).confluent();
  result.iteration_cap_hit = !result.fixpoint;
  return result;
}

// ---------------------------------------------------------------------------
// Counting reduced words

std::vector<BigInt> count_reduced_words(const RuleSet& rules, std::size_t max_len) {
  const auto alphabet = rules.chain().alphabet();
  const std::size_t sigma = alphabet.size();
  std::unordered_map<Letter, std::uint32_t, LetterHash> letter_index;
  for (std::uint32_t k = 0; k < sigma; ++k) letter_index.emplace(alphabet[k], k);

  // Aho-Corasick automaton over the left-hand sides.
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> children(1);
  std::vector<bool> dead(1, false);
  for (const auto& [lhs, rule] : rules.rules()) {
    std::uint32_t state = 0;
    bool known = true;
    for (const auto& l : lhs) {
      auto it = letter_index.find(l);
      if (it == letter_index.end()) {
        known = false;
        break;
      }
      auto [child, inserted] = children[state].try_emplace(it->second, static_cast<std::uint32_t>(children.size()));
      if (inserted) {
        children.emplace_back();
        dead.push_back(false);
      }
      state = child->second;
    }
    if (known) dead[state] = true;
  }

  const std::size_t states = children.size();
  std::vector<std::uint32_t> go(states * sigma, 0);
  std::vector<std::uint32_t> fail(states, 0);
  std::deque<std::uint32_t> bfs;
  for (std::uint32_t c = 0; c < sigma; ++c) {
    auto it = children[0].find(c);
    if (it != children[0].end()) {
      go[c] = it->second;
      bfs.push_back(it->second);
    }
  }
  while (!bfs.empty()) {
    const auto s = bfs.front();
    bfs.pop_front();
    dead[s] = dead[s] || dead[fail[s]];
    for (std::uint32_t c = 0; c < sigma; ++c) {
      auto it = children[s].find(c);
      if (it != children[s].end()) {
        fail[it->second] = go[fail[s] * sigma + c];
        go[s * sigma + c] = it->second;
        bfs.push_back(it->second);
      } else {
        go[s * sigma + c] = go[fail[s] * sigma + c];
      }
    }
  }

  std::vector<BigInt> counts{1};
  std::vector<BigInt> current(states, 0);
  current[0] = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<BigInt> next(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (current[s] == 0) continue;
      for (std::size_t c = 0; c < sigma; ++c) {
        const auto t = go[s * sigma + c];
        if (!dead[t]) next[t] += current[s];
      }
    }
    BigInt total = 0;
    for (const auto& v : next) total += v;
    counts.push_back(total);
    current = std::move(next);
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Linear-algebra oracle

std::size_t default_max_words() {
  if (const char* env = std::getenv("SKEWHOPF_MAX_WORDS")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100000;
}

std::size_t oracle_dimension(const ValidatedChain& chain, std::size_t max_len, std::size_t max_words) {
  const auto alphabet = chain.alphabet();
  const std::size_t sigma = alphabet.size();

  // All words by length, with a column number each.
  std::vector<std::vector<Word>> by_length{{Word{}}};
  std::size_t total = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (sigma != 0 && by_length.back().size() > max_words / sigma) {
      throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_words) + " words up to length " +
                                           std::to_string(max_len));
    }
    total += by_length.back().size() * sigma;
    if (total > max_words) {
      throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_words) + " words up to length " +
                                           std::to_string(max_len));
    }
    std::vector<Word> next;
    next.reserve(by_length.back().size() * sigma);
    for (const auto& w : by_length.back()) {
      for (const auto& l : alphabet) next.push_back(w * Word(l));
    }
    by_length.push_back(std::move(next));
  }
  std::unordered_map<Word, std::uint32_t, WordHash> column;
  for (const auto& level : by_length) {
    for (const auto& w : level) column.emplace(w, static_cast<std::uint32_t>(column.size()));
  }

  // Antipode identities, straight from presence.
  std::vector<std::vector<std::pair<Word, Rational>>> identities;
  for (int r = chain.lo(); r < chain.hi(); ++r) {
    for (std::size_t c = 0; c < chain.component_count(); ++c) {
      const auto comp = chain.component(c);
      for (auto i : comp) {
        for (auto j : comp) {
          std::vector<std::pair<Word, Rational>> row_identity;
          std::vector<std::pair<Word, Rational>> col_identity;
          for (auto u : comp) {
            if (chain.present(r, i, u) && chain.present(r + 1, j, u)) {
              row_identity.emplace_back(Word{Letter{r, i, u}, Letter{r + 1, j, u}}, 1);
            }
            if (chain.present(r + 1, u, i) && chain.present(r, u, j)) {
              col_identity.emplace_back(Word{Letter{r + 1, u, i}, Letter{r, u, j}}, 1);
            }
          }
          for (auto* identity : {&row_identity, &col_identity}) {
            if (i == j) identity->emplace_back(Word{}, -1);
            if (!identity->empty()) identities.push_back(std::move(*identity));
          }
        }
      }
    }
  }

  RowEchelon echelon;
  if (max_len >= 2) {
    for (const auto& identity : identities) {
      for (std::size_t left = 0; left + 2 <= max_len; ++left) {
        for (std::size_t right = 0; left + 2 + right <= max_len; ++right) {
          for (const auto& u : by_length[left]) {
            for (const auto& v : by_length[right]) {
              std::vector<std::pair<std::uint32_t, Rational>> entries;
              for (const auto& [w, c] : identity) entries.emplace_back(column.at(u * w * v), c);
              echelon.insert(make_sparse_row(std::move(entries)));
            }
          }
        }
      }
    }
  }
  return total - echelon.rank();
}

}  // namespace skewhopf::rewrite
