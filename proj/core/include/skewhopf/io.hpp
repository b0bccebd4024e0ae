#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "skewhopf/chain.hpp"
#include "skewhopf/comodule.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/ncpoly.hpp"
#include "skewhopf/rewrite.hpp"

namespace skewhopf::io {

/// Output documents keep keys in insertion order so dumps are stable.
using Json = nlohmann::ordered_json;

/// Parses an expression over the chain's generators:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff factor-list | coeff | factor-list
///   factor := 'x[' int ',' id ',' id ']' | integer | '(' expr ')'
///   coeff  := integer ['/' positive-integer]
/// Factors are joined by '*'; whitespace is ignored. Throws ParseError
/// (1-based position), UnknownIndex or LevelOutOfWindow.
NCPoly parse_expr(std::string_view text, const ValidatedChain& chain);

std::string format_letter(const Letter& l, const ValidatedChain& chain);
std::string format_word(const Word& w, const ValidatedChain& chain);

/// Canonical text: terms in ascending word order, e.g. "1 - 1/2 x[0,1,1]".
std::string format_poly(const NCPoly& p, const ValidatedChain& chain);

template <std::size_t N>
std::string format_tensor(const Tensor<N>& t, const ValidatedChain& chain);

ChainSpec chain_from_json(const nlohmann::json& doc);
Json chain_to_json(const ChainSpec& spec);
ChainSpec load_chain_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

Json letter_json(const Letter& l, const ValidatedChain& chain);
Json word_json(const Word& w, const ValidatedChain& chain);
/// [[coeff, [letters]], ...] in ascending word order.
Json poly_json(const NCPoly& p, const ValidatedChain& chain);
/// [[coeff, [letters], [letters], ...], ...].
template <std::size_t N>
Json tensor_json(const Tensor<N>& t, const ValidatedChain& chain);

Json rule_json(const rewrite::Rule& rule, const ValidatedChain& chain);
Json rules_json(const rewrite::RuleSet& rules);
Json ambiguity_json(const rewrite::Ambiguity& a, const ValidatedChain& chain);
Json confluence_json(const rewrite::ConfluenceReport& report, const ValidatedChain& chain);
Json completion_json(const rewrite::CompletionResult& result);

Json comodule_json(const comodule::ComoduleStructure& s, const ValidatedChain& chain);
Json lattice_json(const comodule::SubspaceLattice& lattice);
Json growth_json(const comodule::GrowthReport& report);
Json coradical_json(const hopf::CoradicalSplit& split, const ValidatedChain& chain);

}  // namespace skewhopf::io
