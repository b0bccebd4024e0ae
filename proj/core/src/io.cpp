#include "skewhopf/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "skewhopf/error.hpp"

namespace skewhopf::io {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ValidatedChain& chain) : text_(text), chain_(chain) {}

  NCPoly parse() {
    NCPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BigInt integer() {
    if (!peek_digit()) fail("expected integer");
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int signed_small_integer() {
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    const auto start = pos_;
    const BigInt value = integer();
    if (value > 1000000) {
      pos_ = start;
      fail("level out of range");
    }
    const int v = static_cast<int>(value);
    return negative ? -v : v;
  }

  std::string identifier() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_' && c != '.') break;
      ++pos_;
    }
    if (pos_ == start) fail("expected index");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational coefficient() {
    const BigInt num = integer();
    if (peek('/')) {
      ++pos_;
      const auto at = pos_;
      const BigInt den = integer();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return Rational(num, den);
    }
    return Rational(num, BigInt(1));
  }

  bool at_factor() { return peek('x') || peek('(') || peek_digit(); }

  NCPoly letter() {
    expect('x');
    if (pos_ >= text_.size() || text_[pos_] != '[') {
      skip_space();
      expect('[');
    } else {
      ++pos_;
    }
    const int r = signed_small_integer();
    expect(',');
    const auto i_name = identifier();
    expect(',');
    const auto j_name = identifier();
    expect(']');
    const auto i = chain_.find(i_name);
    if (!i) throw Error(ErrorCode::UnknownIndex, "unknown index '" + i_name + "'");
    const auto j = chain_.find(j_name);
    if (!j) throw Error(ErrorCode::UnknownIndex, "unknown index '" + j_name + "'");
    if (!chain_.in_window(r)) {
      throw Error(ErrorCode::LevelOutOfWindow, "level " + std::to_string(r) + " outside window");
    }
    return NCPoly(Letter{r, *i, *j});
  }

  NCPoly factor() {
    if (peek('x')) return letter();
    if (peek('(')) {
      ++pos_;
      NCPoly inner = expr();
      expect(')');
      return inner;
    }
    if (peek_digit()) return NCPoly::constant(Rational(integer(), BigInt(1)));
    fail("expected factor");
  }

  NCPoly factors() {
    NCPoly product = factor();
    while (peek('*')) {
      ++pos_;
      product = product * factor();
    }
    return product;
  }

  NCPoly term() {
    if (peek_digit()) {
      const Rational c = coefficient();
      if (peek('*')) {
        ++pos_;
        return c * factors();
      }
      if (peek('x') || peek('(')) return c * factors();
      return NCPoly::constant(c);
    }
    if (peek('x') || peek('(')) return factors();
    fail("expected term");
  }

  NCPoly expr() {
    NCPoly result;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    NCPoly first = term();
    result += negative ? -first : first;
    while (true) {
      if (peek('+')) {
        ++pos_;
        result += term();
      } else if (peek('-')) {
        ++pos_;
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  std::string_view text_;
  const ValidatedChain& chain_;
  std::size_t pos_ = 0;
};

[[noreturn]] void bad_chain(const std::string& msg) { throw Error(ErrorCode::BadChainFile, msg); }

std::vector<std::string> string_array(const nlohmann::json& node, const std::string& what) {
  if (!node.is_array()) bad_chain(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) bad_chain(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> nested_array(const nlohmann::json& node, const std::string& what) {
  if (!node.is_array()) bad_chain(what + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& item : node) out.push_back(string_array(item, what + " entries"));
  return out;
}

int integer_field(const nlohmann::json& node, const std::string& what) {
  if (!node.is_number_integer()) bad_chain(what + " must be an integer");
  const auto v = node.get<long long>();
  if (v < -1000000 || v > 1000000) bad_chain(what + " out of range");
  return static_cast<int>(v);
}

void check_keys(const nlohmann::json& node, const std::set<std::string>& allowed, const std::string& what) {
  if (!node.is_object()) bad_chain(what + " must be an object");
  for (const auto& [key, value] : node.items()) {
    if (!allowed.contains(key)) bad_chain("unknown key '" + key + "' in " + what);
  }
}

const nlohmann::json& required(const nlohmann::json& node, const std::string& key, const std::string& what) {
  const auto it = node.find(key);
  if (it == node.end()) bad_chain("missing key '" + key + "' in " + what);
  return *it;
}

Json rational_json(const Rational& c) { return c.to_string(); }

}  // namespace

NCPoly parse_expr(std::string_view text, const ValidatedChain& chain) { return Parser(text, chain).parse(); }

std::string format_letter(const Letter& l, const ValidatedChain& chain) {
  return "x[" + std::to_string(l.level) + "," + chain.name(l.row) + "," + chain.name(l.col) + "]";
}

std::string format_word(const Word& w, const ValidatedChain& chain) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += "*";
    out += format_letter(w[k], chain);
  }
  return out;
}

namespace {

std::string format_scaled(const Word& w, const Rational& magnitude, const ValidatedChain& chain) {
  if (w.empty()) return magnitude.to_string();
  if (magnitude == Rational(1)) return format_word(w, chain);
  return magnitude.to_string() + " " + format_word(w, chain);
}

}  // namespace

std::string format_poly(const NCPoly& p, const ValidatedChain& chain) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_scaled(w, c.abs(), chain);
    first = false;
  }
  return out;
}

template <std::size_t N>
std::string format_tensor(const Tensor<N>& t, const ValidatedChain& chain) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = c.abs();
    if (magnitude != Rational(1)) out += magnitude.to_string() + " ";
    for (std::size_t k = 0; k < N; ++k) {
      if (k > 0) out += " (x) ";
      out += format_word(key[k], chain);
    }
    first = false;
  }
  return out;
}

template std::string format_tensor<2>(const Tensor<2>&, const ValidatedChain&);
template std::string format_tensor<3>(const Tensor<3>&, const ValidatedChain&);

ChainSpec chain_from_json(const nlohmann::json& doc) {
  check_keys(doc, {"indices", "components", "window", "levels"}, "chain");
  ChainSpec spec;
  spec.indices = string_array(required(doc, "indices", "chain"), "indices");
  spec.components = nested_array(required(doc, "components", "chain"), "components");
  const auto& window = required(doc, "window", "chain");
  check_keys(window, {"lo", "hi"}, "window");
  spec.lo = integer_field(required(window, "lo", "window"), "window.lo");
  spec.hi = integer_field(required(window, "hi", "window"), "window.hi");
  if (const auto it = doc.find("levels"); it != doc.end()) {
    if (!it->is_array()) bad_chain("levels must be an array");
    for (const auto& level : *it) {
      check_keys(level, {"r", "blocks"}, "level");
      LevelBlocks lb;
      lb.r = integer_field(required(level, "r", "level"), "level.r");
      lb.blocks = nested_array(required(level, "blocks", "level"), "blocks");
      spec.levels.push_back(std::move(lb));
    }
  }
  return spec;
}

Json chain_to_json(const ChainSpec& spec) {
  Json doc;
  doc["indices"] = spec.indices;
  doc["components"] = spec.components;
  doc["window"] = Json{{"lo", spec.lo}, {"hi", spec.hi}};
  Json levels = Json::array();
  for (const auto& level : spec.levels) levels.push_back(Json{{"r", level.r}, {"blocks", level.blocks}});
  doc["levels"] = std::move(levels);
  return doc;
}

ChainSpec load_chain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_chain("cannot open chain file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    bad_chain(std::string("malformed JSON: ") + e.what());
  }
  return chain_from_json(doc);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json letter_json(const Letter& l, const ValidatedChain& chain) {
  return Json::array({l.level, chain.name(l.row), chain.name(l.col)});
}

Json word_json(const Word& w, const ValidatedChain& chain) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back(letter_json(l, chain));
  return out;
}

Json poly_json(const NCPoly& p, const ValidatedChain& chain) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back(Json::array({rational_json(c), word_json(w, chain)}));
  return out;
}

template <std::size_t N>
Json tensor_json(const Tensor<N>& t, const ValidatedChain& chain) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json term = Json::array({rational_json(c)});
    for (const auto& w : key) term.push_back(word_json(w, chain));
    out.push_back(std::move(term));
  }
  return out;
}

template Json tensor_json<2>(const Tensor<2>&, const ValidatedChain&);
template Json tensor_json<3>(const Tensor<3>&, const ValidatedChain&);

Json rule_json(const rewrite::Rule& rule, const ValidatedChain& chain) {
  Json out;
  out["lhs"] = word_json(rule.lhs, chain);
  out["rhs"] = poly_json(rule.rhs, chain);
  out["family"] = std::string(rewrite::family_name(rule.family));
  if (rule.origin) {
    out["origin"] = Json::array({rule.origin->r, chain.name(rule.origin->i), chain.name(rule.origin->j)});
  }
  return out;
}

Json rules_json(const rewrite::RuleSet& rules) {
  Json out = Json::array();
  for (const auto& [lhs, rule] : rules.rules()) out.push_back(rule_json(rule, rules.chain()));
  return out;
}

Json ambiguity_json(const rewrite::Ambiguity& a, const ValidatedChain& chain) {
  Json out;
  out["word"] = word_json(a.word, chain);
  out["left"] = word_json(a.left_lhs, chain);
  out["right"] = word_json(a.right_lhs, chain);
  out["offset"] = a.right_offset;
  out["kind"] = a.inclusion ? "inclusion" : "overlap";
  return out;
}

Json confluence_json(const rewrite::ConfluenceReport& report, const ValidatedChain& chain) {
  Json out;
  out["confluent"] = report.confluent();
  out["ambiguities"] = report.ambiguity_count;
  out["resolved"] = report.resolved;
  Json unresolved = Json::array();
  for (const auto& u : report.unresolved) {
    Json entry = ambiguity_json(u.ambiguity, chain);
    entry["residual"] = poly_json(u.residual, chain);
    unresolved.push_back(std::move(entry));
  }
  out["unresolved"] = std::move(unresolved);
  return out;
}

Json completion_json(const rewrite::CompletionResult& result) {
  const auto& chain = result.rules.chain();
  Json out;
  out["fixpoint"] = result.fixpoint;
  out["degreeCapHit"] = result.degree_cap_hit;
  out["iterationCapHit"] = result.iteration_cap_hit;
  out["collapsed"] = result.collapsed;
  out["iterations"] = result.iterations;
  Json derived = Json::array();
  for (const auto& p : result.derived) derived.push_back(poly_json(p, chain));
  out["derived"] = std::move(derived);
  out["rules"] = rules_json(result.rules);
  return out;
}

Json comodule_json(const comodule::ComoduleStructure& s, const ValidatedChain& chain) {
  Json out;
  out["level"] = s.level;
  out["component"] = s.component;
  Json basis = Json::array();
  for (auto id : s.basis) basis.push_back(chain.name(id));
  out["basis"] = std::move(basis);
  Json matrix = Json::array();
  for (const auto& row : s.coaction) {
    Json cells = Json::array();
    for (const auto& cell : row) cells.push_back(cell ? letter_json(*cell, chain) : Json(nullptr));
    matrix.push_back(std::move(cells));
  }
  out["coaction"] = std::move(matrix);
  return out;
}

Json lattice_json(const comodule::SubspaceLattice& lattice) {
  Json out = Json::array();
  for (const auto& element : lattice.elements) out.push_back(element);
  return out;
}

Json growth_json(const comodule::GrowthReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"r", row.r}, {"minSimpleDim", row.min_simple_dim}, {"supOK", row.sup_ok}});
  }
  return rows;
}

Json coradical_json(const hopf::CoradicalSplit& split, const ValidatedChain& chain) {
  Json out = Json::array();
  for (const auto& level : split.levels) {
    Json diagonal = Json::array();
    for (const auto& l : level.diagonal) diagonal.push_back(letter_json(l, chain));
    Json off = Json::array();
    for (const auto& l : level.off_diagonal) off.push_back(letter_json(l, chain));
    out.push_back(Json{{"r", level.r}, {"diagonal", std::move(diagonal)}, {"offDiagonal", std::move(off)}});
  }
  return out;
}

}  // namespace skewhopf::io
