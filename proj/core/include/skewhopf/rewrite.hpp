#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skewhopf/chain.hpp"
#include "skewhopf/ncpoly.hpp"

namespace skewhopf::rewrite {

/// Which antipode identity a rule orients. Row rules come from
/// sum_a x^r_{ia} x^{r+1}_{ja} = delta_ij, column rules from
/// sum_b x^{r+1}_{bi} x^r_{bj} = delta_ij; "0" and "1" give the parity of r.
enum class RuleFamily {
  ZeroUp,    // row rule, r even, extreme = max
  OneUp,     // row rule, r odd, extreme = min
  OneDown,   // column rule, r odd, extreme = max
  ZeroDown,  // column rule, r even, extreme = min
  Completion,
};

std::string_view family_name(RuleFamily family);

struct RuleOrigin {
  int r = 0;
  IndexId i{};
  IndexId j{};
};

/// Oriented relation lhs -> rhs. Every rhs word is strictly smaller than lhs
/// in WordLess, so rewriting terminates for any strategy.
struct Rule {
  Word lhs;
  NCPoly rhs;
  RuleFamily family = RuleFamily::Completion;
  std::optional<RuleOrigin> origin;
};

struct Redex {
  std::size_t position = 0;
  const Rule* rule = nullptr;
};

/// Rules indexed by left-hand side, tied to the chain they rewrite over.
class RuleSet {
 public:
  explicit RuleSet(std::shared_ptr<const ValidatedChain> chain);

  RuleSet(const RuleSet& other);
  RuleSet& operator=(const RuleSet& other);
  RuleSet(RuleSet&&) noexcept = default;
  RuleSet& operator=(RuleSet&&) noexcept = default;

  const ValidatedChain& chain() const { return *chain_; }
  const std::shared_ptr<const ValidatedChain>& chain_ptr() const { return chain_; }

  /// Rules in WordLess order of their left-hand sides.
  const std::map<Word, Rule, WordLess>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const Rule* find(const Word& lhs) const;

  /// Leftmost-innermost occurrence of a left-hand side: smallest end
  /// position, then shortest pattern.
  std::optional<Redex> find_redex(const Word& w) const;

  /// Throws std::invalid_argument if lhs is taken or the rule is not
  /// decreasing.
  void insert(Rule rule);
  bool erase(const Word& lhs);

 private:
  void rebuild_lookup();

  std::shared_ptr<const ValidatedChain> chain_;
  std::map<Word, Rule, WordLess> rules_;
  std::unordered_map<Word, const Rule*, WordHash> lookup_;
  std::map<std::size_t, std::size_t> lengths_;  // lhs length -> count
};

/// Orients the antipode identities of every adjacent level pair of the
/// window. Throws InconsistentChain if an identity would read 1 = 0.
RuleSet derive_rules(const ValidatedChain& chain);

/// Rewrites to normal form. Throws LetterOutOfWindow for letters that are
/// not generators of the chain.
NCPoly normal_form(const RuleSet& rules, const NCPoly& p);
NCPoly normal_form(const RuleSet& rules, const Word& w);

/// Overlap (or, for completed systems, inclusion) of two left-hand sides
/// inside `word`. The left rule matches at 0 and the right one at
/// right_offset.
struct Ambiguity {
  Word word;
  Word left_lhs;
  Word right_lhs;
  std::size_t right_offset = 0;
  bool inclusion = false;
};

std::vector<Ambiguity> ambiguities(const RuleSet& rules);

/// Difference of the normal forms reached by applying each rule first.
NCPoly residual(const RuleSet& rules, const Ambiguity& ambiguity);

struct UnresolvedAmbiguity {
  Ambiguity ambiguity;
  NCPoly residual;
};

struct ConfluenceReport {
  std::size_t ambiguity_count = 0;
  std::size_t resolved = 0;
  std::vector<UnresolvedAmbiguity> unresolved;

  bool confluent() const { return unresolved.empty(); }
};

/// Resolves every ambiguity; `threads` > 1 splits the work without changing
/// the report.
ConfluenceReport check_confluence(const RuleSet& rules, unsigned threads = 1);

struct CompletionResult {
  RuleSet rules;
  /// New relations (equal to 0 in the quotient), monic in their leading word.
  std::vector<NCPoly> derived;
  bool fixpoint = false;
  bool degree_cap_hit = false;
  bool iteration_cap_hit = false;
  /// A nonzero constant was derived: the quotient algebra is zero.
  bool collapsed = false;
  std::size_t iterations = 0;
};

/// Bounded Knuth-Bendix completion: orients nonzero residuals by WordLess,
/// drops those of degree > max_degree, inter-reduces, and repeats until no
/// new relation appears or max_iterations rounds have run.
CompletionResult complete(const RuleSet& rules, std::size_t max_degree, std::size_t max_iterations);

/// Number of words of each length 0..max_len over the chain's generators
/// that avoid every left-hand side.
std::vector<BigInt> count_reduced_words(const RuleSet& rules, std::size_t max_len);

/// Word-count cap for oracle_dimension: SKEWHOPF_MAX_WORDS if set, else 1e5.
std::size_t default_max_words();

/// Dimension of the degree <= max_len part of the free algebra modulo the
/// span of u * (antipode identity) * v of total degree <= max_len, by exact
/// Gaussian elimination. The identities are built directly from the chain,
/// independently of derive_rules. Throws TooLarge beyond max_words words.
std::size_t oracle_dimension(const ValidatedChain& chain, std::size_t max_len,
                             std::size_t max_words = default_max_words());

}  // namespace skewhopf::rewrite
